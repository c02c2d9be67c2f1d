#pragma once

#include "specrisk/degree.hpp"
#include "specrisk/errors.hpp"
#include "specrisk/evaluate.hpp"
#include "specrisk/extended_real.hpp"
#include "specrisk/io.hpp"
#include "specrisk/measure.hpp"
#include "specrisk/metrics.hpp"
#include "specrisk/stieltjes.hpp"
