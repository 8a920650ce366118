#include "tptest/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tptest {

std::string fixture_text(const std::string& name)
{
    const std::string file = std::string(TILEPUMP_FIXTURE_DIR) + "/" + name + ".json";
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("missing fixture " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

tilepump::io::Instance fixture(const std::string& name)
{
    return tilepump::io::parse_instance(fixture_text(name));
}

}  // namespace tptest
