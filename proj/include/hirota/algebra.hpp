#pragma once

#include "hirota/algebra/gcd.hpp"
#include "hirota/algebra/multipoly.hpp"
#include "hirota/algebra/ratfunc.hpp"
#include "hirota/algebra/scalar.hpp"
#include "hirota/algebra/text.hpp"
