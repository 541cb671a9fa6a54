#pragma once

#include "qrat/closures.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/farey.hpp"
#include "qrat/jones.hpp"
#include "qrat/ptolemy.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"
#include "qrat/sequences.hpp"
#include "qrat/serialize.hpp"
#include "qrat/triangulation.hpp"
#include "qrat/verify.hpp"
