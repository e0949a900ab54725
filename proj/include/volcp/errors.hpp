#pragma once

#include <stdexcept>
#include <string>

namespace volcp {

// Failure categories surfaced by the library. The CLI maps invalid_input to a
// configuration/input exit code and everything else to a numeric exit code.
enum class errc {
    invalid_input,
    block_too_small,
    block_too_large,
    window_too_large,
    domain_error,
    grid_too_large,
    cholesky_failure,
    all_truncated,
    zero_denominator,
    degenerate_quarticity,
    zero_spot_vol,
    no_convergence,
    max_iterations,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_input: return "invalid_input";
        case errc::block_too_small: return "block_too_small";
        case errc::block_too_large: return "block_too_large";
        case errc::window_too_large: return "window_too_large";
        case errc::domain_error: return "domain_error";
        case errc::grid_too_large: return "grid_too_large";
        case errc::cholesky_failure: return "cholesky_failure";
        case errc::all_truncated: return "all_truncated";
        case errc::zero_denominator: return "zero_denominator";
        case errc::degenerate_quarticity: return "degenerate_quarticity";
        case errc::zero_spot_vol: return "zero_spot_vol";
        case errc::no_convergence: return "no_convergence";
        case errc::max_iterations: return "max_iterations";
    }
    return "unknown";
}

} // namespace volcp
