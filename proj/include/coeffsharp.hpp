#pragma once

#include "coeffsharp/scalar.hpp"
#include "coeffsharp/series.hpp"
#include "coeffsharp/dynamic_series.hpp"
#include "coeffsharp/caratheodory.hpp"
#include "coeffsharp/functionals.hpp"
#include "coeffsharp/search.hpp"
#include "coeffsharp/lemmas.hpp"
#include "coeffsharp/verifier.hpp"
#include "coeffsharp/expr.hpp"
#include "coeffsharp/report.hpp"
