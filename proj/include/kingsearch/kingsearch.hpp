#pragma once

#include <kingsearch/adversary.hpp>
#include <kingsearch/algorithms.hpp>
#include <kingsearch/core.hpp>
#include <kingsearch/errors.hpp>
#include <kingsearch/exact.hpp>
#include <kingsearch/experiment.hpp>
#include <kingsearch/io.hpp>
#include <kingsearch/oracle.hpp>
#include <kingsearch/protocol.hpp>
#include <kingsearch/random.hpp>
