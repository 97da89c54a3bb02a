/// @file ewi.hpp
/// @brief Umbrella header for the graph library (the CLI lives in cli.hpp).

#pragma once

#include "canonical.hpp"
#include "closed_forms.hpp"
#include "constructions.hpp"
#include "distance.hpp"
#include "enumerator.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "structure.hpp"
#include "verifier.hpp"
