#pragma once

#include "ria/harness/acceptance.hpp"
#include "ria/harness/bounds.hpp"
#include "ria/harness/csv.hpp"
#include "ria/harness/io.hpp"
#include "ria/harness/run.hpp"
