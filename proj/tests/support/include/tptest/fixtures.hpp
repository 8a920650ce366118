#pragma once

#include <string>

#include "tilepump/io/instance.hpp"

namespace tptest {

// Loads fixtures/<name>.json.
tilepump::io::Instance fixture(const std::string& name);
std::string fixture_text(const std::string& name);

}  // namespace tptest
