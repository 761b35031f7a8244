#pragma once

#include "rings.hpp"
#include "matrix.hpp"
#include "quotient.hpp"
#include "groups.hpp"
#include "words.hpp"
#include "lef.hpp"
#include "approx.hpp"
#include "twisted.hpp"
#include "literals.hpp"
