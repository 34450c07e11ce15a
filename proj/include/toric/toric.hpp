#pragma once

#include <toric/arith.hpp>
#include <toric/vec.hpp>
#include <toric/matrix.hpp>
#include <toric/linalg.hpp>
#include <toric/lp.hpp>
#include <toric/bouquet.hpp>
#include <toric/multiset.hpp>
#include <toric/glm.hpp>
#include <toric/graver.hpp>
#include <toric/fiber.hpp>
#include <toric/markov.hpp>
#include <toric/selfdual.hpp>
