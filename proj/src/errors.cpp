#include "blowade/errors.hpp"

namespace blowade {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::ExponentOverflow: return "exponent_overflow";
    case ErrorKind::ZeroPolynomial: return "zero_polynomial";
    case ErrorKind::NonzeroConstantTerm: return "nonzero_constant_term";
    case ErrorKind::TruncationMismatch: return "truncation_mismatch";
    case ErrorKind::TruncationExhausted: return "truncation_exhausted";
    case ErrorKind::UnboundedRegion: return "unbounded_region";
    case ErrorKind::NotASingularity: return "not_a_singularity";
    case ErrorKind::IndeterminateType: return "indeterminate_type";
    case ErrorKind::NonReducedTangentCone: return "non_reduced_tangent_cone";
    case ErrorKind::NonRationalSingularLocus: return "non_rational_singular_locus";
    case ErrorKind::NonIsolatedSingularity: return "non_isolated_singularity";
    case ErrorKind::BlowOrderExceeded: return "blow_order_exceeded";
    case ErrorKind::NotBlowADEShape: return "not_blow_ade_shape";
    case ErrorKind::DegenerateGerm: return "degenerate_germ";
    case ErrorKind::IndeterminateNondegeneracy: return "indeterminate_nondegeneracy";
    case ErrorKind::LevelOutOfRange: return "level_out_of_range";
    case ErrorKind::UncertifiedReport: return "uncertified_report";
    case ErrorKind::DegenerateForMuStar: return "degenerate_for_mu_star";
    case ErrorKind::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace blowade
