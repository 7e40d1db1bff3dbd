#pragma once

#include "tubecat/errors.hpp"
#include "tubecat/tube.hpp"
#include "tubecat/derived.hpp"
#include "tubecat/rep_oracle.hpp"
#include "tubecat/smc.hpp"
#include "tubecat/mutation.hpp"
#include "tubecat/exchange_graph.hpp"
#include "tubecat/ext_quiver.hpp"
#include "tubecat/wire.hpp"
#include "tubecat/service.hpp"
