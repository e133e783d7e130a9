#ifndef SYT_ERRORS_HPP
#define SYT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syt {

enum class Errc {
    invalid_partition,
    shape_mismatch,
    not_standard,
    alphabet_violation,
    empty_shape,
    invalid_coord,
    size_out_of_range,
    entry_absent,
    range_invalid,
    k_too_large,
    malformed_key,
    no_candidate,
    shape_ambiguous,
    inconsistent_diff,
    precondition_unmet,
    no_surviving_minor,
    inconsistent_minors,
    ceiling_exceeded,
};

const char* errc_name(Errc code) noexcept;

// Single exception type carrying a machine-checkable code; tests match on
// code(), messages are for humans.
class SytError : public std::runtime_error {
public:
    SytError(Errc code, const std::string& what)
        : std::runtime_error(errc_name(code) + std::string(": ") + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& what) {
    throw SytError(code, what);
}

} // namespace syt

#endif
