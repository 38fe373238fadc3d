#pragma once

#include "alglen/algebra.hpp"
#include "alglen/bounds.hpp"
#include "alglen/constructions.hpp"
#include "alglen/errors.hpp"
#include "alglen/field.hpp"
#include "alglen/io.hpp"
#include "alglen/length.hpp"
#include "alglen/linalg.hpp"
#include "alglen/parallel.hpp"
