#pragma once

// Umbrella header.

#include "lieweights/automizer.hpp"
#include "lieweights/counting.hpp"
#include "lieweights/error.hpp"
#include "lieweights/exceptional.hpp"
#include "lieweights/partition.hpp"
#include "lieweights/rootdata.hpp"
#include "lieweights/series.hpp"
#include "lieweights/stubborn.hpp"
#include "lieweights/verify.hpp"
#include "lieweights/weights.hpp"
