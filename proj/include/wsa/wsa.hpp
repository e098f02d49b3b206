#pragma once

#include "rational.hpp"
#include "prime_field.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "quiver.hpp"
#include "triangulation.hpp"
#include "relations.hpp"
#include "algebra.hpp"
#include "families.hpp"
#include "presentations.hpp"
#include "representation.hpp"
#include "homological.hpp"
#include "parallel.hpp"
#include "cluster.hpp"
#include "spec_file.hpp"
#include "json_io.hpp"
