#pragma once

#include "zft/catalog.hpp"
#include "zft/extension.hpp"
#include "zft/graph6.hpp"
#include "zft/harness.hpp"
#include "zft/json.hpp"
#include "zft/minor_script.hpp"
#include "zft/spectral.hpp"
#include "zft/throttle.hpp"
