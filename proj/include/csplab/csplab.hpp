#pragma once

#include "csplab/core.hpp"
#include "csplab/corpus.hpp"
#include "csplab/exact.hpp"
#include "csplab/lprelax.hpp"
#include "csplab/patmin.hpp"
#include "csplab/patterns.hpp"
#include "csplab/rational.hpp"
#include "csplab/report.hpp"
#include "csplab/simplex.hpp"
