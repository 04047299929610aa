#pragma once

#include <stdexcept>
#include <string>

namespace seqcorr {

enum class Errc {
    non_primitive_modulus,
    degree_too_large,
    division_by_zero,
    not_in_subfield,
    bad_tower,
    dlog_of_zero,
    zero_input,
    no_cubic_structure,
    not_coprime,
    bad_parameters,
    invariant_failure,
    shift_out_of_range,
    too_large_for_exhaustive,
    unexpected_dimension,
    prediction_mismatch,
    bad_h,
    cube_input,
    bad_k,
};

/// All library errors carry a code so callers can map them to exit codes
/// without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

const char* errc_name(Errc code) noexcept;

} // namespace seqcorr
