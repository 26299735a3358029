#pragma once

#include "llshock/random.hpp"
#include "llshock/log_lindley.hpp"
#include "llshock/shock_model.hpp"
#include "llshock/majorization.hpp"
#include "llshock/h_function.hpp"
#include "llshock/stoch_order.hpp"
#include "llshock/theorem_lab.hpp"
#include "llshock/io.hpp"
