#pragma once

namespace gl2::cli {

/// Exit codes: 0 success, 1 a bound or check failed, 2 bad usage or input.
int run(int argc, char** argv);

}  // namespace gl2::cli
