#pragma once

#include "pack2dom/bounds.hpp"
#include "pack2dom/canonical.hpp"
#include "pack2dom/domination.hpp"
#include "pack2dom/enumeration.hpp"
#include "pack2dom/family.hpp"
#include "pack2dom/graph.hpp"
#include "pack2dom/io.hpp"
#include "pack2dom/matching.hpp"
#include "pack2dom/packing.hpp"
#include "pack2dom/subgraph.hpp"
#include "pack2dom/verification.hpp"
