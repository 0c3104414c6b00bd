#pragma once

#include "hirota/confinement/gauge.hpp"
#include "hirota/confinement/periodic.hpp"
#include "hirota/confinement/reference.hpp"
#include "hirota/confinement/symbolic.hpp"
