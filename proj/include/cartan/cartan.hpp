#pragma once

#include "cartan/errors.hpp"
#include "cartan/f2_sum.hpp"
#include "cartan/graded_map.hpp"
#include "cartan/simplicial.hpp"
#include "cartan/permutation.hpp"
#include "cartan/barratt_eccles.hpp"
#include "cartan/surjection.hpp"
#include "cartan/cochain.hpp"
#include "cartan/io.hpp"
#include "cartan/verify.hpp"
