// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sharpbound/bounds.hpp"
#include "sharpbound/certificate.hpp"
#include "sharpbound/distribution.hpp"
#include "sharpbound/errors.hpp"
#include "sharpbound/extremal.hpp"
#include "sharpbound/interval.hpp"
#include "sharpbound/oracle/dual.hpp"
#include "sharpbound/oracle/grid.hpp"
#include "sharpbound/oracle/moment_system.hpp"
#include "sharpbound/oracle/primal.hpp"
#include "sharpbound/oracle/simplex.hpp"
#include "sharpbound/oracle/verify.hpp"
