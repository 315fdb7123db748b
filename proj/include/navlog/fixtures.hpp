#pragma once

#include "navlog/system.hpp"

#include <string_view>

namespace navlog::fixtures
{

// Contents of fixtures/t0.ets and fixtures/t1.ets, embedded at build time.
std::string_view t0_text();
std::string_view t1_text();

epistemic_transition_system t0();
epistemic_transition_system t1();

} // namespace navlog::fixtures
