#pragma once

#include "lorpoly/casimir.hpp"
#include "lorpoly/config_io.hpp"
#include "lorpoly/deformation.hpp"
#include "lorpoly/errors.hpp"
#include "lorpoly/fock.hpp"
#include "lorpoly/gl_action.hpp"
#include "lorpoly/poisson.hpp"
#include "lorpoly/polyhedron.hpp"
#include "lorpoly/spinor.hpp"
#include "lorpoly/su11.hpp"
