#pragma once

#include "epc/certificate.hpp"
#include "epc/core_hitting.hpp"
#include "epc/cycle_packing.hpp"
#include "epc/driver.hpp"
#include "epc/errors.hpp"
#include "epc/flow.hpp"
#include "epc/generators.hpp"
#include "epc/graph.hpp"
#include "epc/holes.hpp"
#include "epc/oracle.hpp"
