#pragma once

#include "mwv/anneal.hpp"
#include "mwv/axioms.hpp"
#include "mwv/datasets.hpp"
#include "mwv/distributions.hpp"
#include "mwv/election.hpp"
#include "mwv/errors.hpp"
#include "mwv/fixtures.hpp"
#include "mwv/implications.hpp"
#include "mwv/io.hpp"
#include "mwv/metrics.hpp"
#include "mwv/parallel.hpp"
#include "mwv/profile.hpp"
#include "mwv/random.hpp"
#include "mwv/rules.hpp"
#include "mwv/search.hpp"
