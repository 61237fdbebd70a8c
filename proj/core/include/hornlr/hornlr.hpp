#pragma once

#include "hornlr/feasibility.hpp"
#include "hornlr/horn_statistics.hpp"
#include "hornlr/monomial_map.hpp"
#include "hornlr/oracle.hpp"
#include "hornlr/partition.hpp"
#include "hornlr/serialization.hpp"
#include "hornlr/tableaux.hpp"
#include "hornlr/verification.hpp"
