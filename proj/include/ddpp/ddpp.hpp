#pragma once

#include "ddpp/compare.hpp"
#include "ddpp/cost_model.hpp"
#include "ddpp/errors.hpp"
#include "ddpp/interval.hpp"
#include "ddpp/io.hpp"
#include "ddpp/link_set.hpp"
#include "ddpp/network.hpp"
#include "ddpp/oracle.hpp"
#include "ddpp/search.hpp"
#include "ddpp/spectrum.hpp"
#include "ddpp/traffic.hpp"
