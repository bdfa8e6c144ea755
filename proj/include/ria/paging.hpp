#pragma once

#include "ria/paging/belady.hpp"
#include "ria/paging/generators.hpp"
#include "ria/paging/instance.hpp"
#include "ria/paging/phases.hpp"
#include "ria/paging/random_mark.hpp"
