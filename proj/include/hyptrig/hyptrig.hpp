#pragma once

#include "hyptrig/errors.hpp"
#include "hyptrig/accel.hpp"
#include "hyptrig/specfun.hpp"
#include "hyptrig/quad.hpp"
#include "hyptrig/catalog.hpp"
#include "hyptrig/auditor.hpp"
#include "hyptrig/cli.hpp"
