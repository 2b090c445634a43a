#ifndef KAWA_TEST_CONTAINMENT_HPP
#define KAWA_TEST_CONTAINMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kawa::oracle
{

struct ContainmentResult
{
    std::string op;
    long trials = 0;
    long violations = 0;
};

// Randomized check that interval results contain the high-precision value of
// the operation at endpoints and interior points of the inputs.
ContainmentResult check_containment(const std::string& op, long trials, std::uint64_t seed);
const std::vector<std::string>& containment_ops();

} // namespace kawa::oracle

#endif
