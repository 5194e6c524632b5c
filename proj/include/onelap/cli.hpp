#pragma once

namespace onelap {

// Full command-line driver. Exit codes: 0 success, 1 parse/IO errors, 2 size
// guard exceeded, 3 compare found mu2 != h, 4 verify rejected the vector.
int run_cli(int argc, const char* const* argv);

} // namespace onelap
