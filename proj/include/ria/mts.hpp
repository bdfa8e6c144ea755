#pragma once

#include "ria/mts/generators.hpp"
#include "ria/mts/instance.hpp"
#include "ria/mts/ledger.hpp"
#include "ria/mts/offline.hpp"
#include "ria/mts/unif_mts.hpp"
