#pragma once

#include "hyperspec/analysis.hpp"
#include "hyperspec/audit.hpp"
#include "hyperspec/commands.hpp"
#include "hyperspec/eigensolver.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/expansion.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/random.hpp"
#include "hyperspec/report_io.hpp"
#include "hyperspec/tensor.hpp"
