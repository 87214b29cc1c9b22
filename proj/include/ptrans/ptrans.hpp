#ifndef PTRANS_PTRANS_HPP
#define PTRANS_PTRANS_HPP

// Umbrella header.
#include "bundle.hpp"
#include "edge_path.hpp"
#include "group.hpp"
#include "io.hpp"
#include "random.hpp"
#include "representation.hpp"
#include "scheme.hpp"
#include "simplicial.hpp"
#include "sweep.hpp"

#endif  // PTRANS_PTRANS_HPP
