#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

enum class errc {
  no_involution,
  bad_sign,
  not_admissible,
  not_distinguished,
  not_in_pn,
  mixed_parity,
  no_sl2,
  model_mismatch,
  non_invariant_witness,
  not_in_algebra,
  not_tau_invariant,
  truncation_overflow,
  bad_shift_matrix,
  shift_mismatch,
  index_out_of_range,
  usage,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::no_involution: return "NoInvolution";
    case errc::bad_sign: return "BadSign";
    case errc::not_admissible: return "NotAdmissible";
    case errc::not_distinguished: return "NotDistinguished";
    case errc::not_in_pn: return "NotInPn";
    case errc::mixed_parity: return "MixedParity";
    case errc::no_sl2: return "NoSl2";
    case errc::model_mismatch: return "ModelMismatch";
    case errc::non_invariant_witness: return "NonInvariantWitness";
    case errc::not_in_algebra: return "NotInAlgebra";
    case errc::not_tau_invariant: return "NotTauInvariant";
    case errc::truncation_overflow: return "TruncationOverflow";
    case errc::bad_shift_matrix: return "BadShiftMatrix";
    case errc::shift_mismatch: return "ShiftMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::usage: return "Usage";
  }
  return "Unknown";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace nilorb
