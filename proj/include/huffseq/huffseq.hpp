#pragma once

#include "huffseq/algebra.hpp"
#include "huffseq/correlation.hpp"
#include "huffseq/decorrelate.hpp"
#include "huffseq/families.hpp"
#include "huffseq/fibonacci.hpp"
#include "huffseq/metrics.hpp"
#include "huffseq/sequence.hpp"
#include "huffseq/types.hpp"
