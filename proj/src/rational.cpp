#include "cst/rational.hpp"

#include "cst/errors.hpp"

namespace cst {

Rat make_rat(long num, long den) {
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        fail(ErrorKind::ParseError, "malformed rational [" + num + ", " + den + "]");
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string numerator_string(const Rat& q) { return q.get_num().get_str(); }
std::string denominator_string(const Rat& q) { return q.get_den().get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat floor_rat(const Rat& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(f);
}

Rat frac(const Rat& q) { return q - floor_rat(q); }

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NonMonotoneCurve: return "NonMonotoneCurve";
        case ErrorKind::InvalidRadii: return "InvalidRadii";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::NotTwiggly: return "NotTwiggly";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::Incompatible: return "Incompatible";
        case ErrorKind::NodeMissing: return "NodeMissing";
        case ErrorKind::NotCylindrical: return "NotCylindrical";
        case ErrorKind::NoSideEdge: return "NoSideEdge";
        case ErrorKind::NotMonotone: return "NotMonotone";
        case ErrorKind::NotStronglyCMonotone: return "NotStronglyCMonotone";
        case ErrorKind::RelationCyclic: return "RelationCyclic";
        case ErrorKind::NotDoubleStar: return "NotDoubleStar";
        case ErrorKind::NotTwinStar: return "NotTwinStar";
        case ErrorKind::NotSpecialTree: return "NotSpecialTree";
        case ErrorKind::BadTree: return "BadTree";
        case ErrorKind::IncompatibleStep: return "IncompatibleStep";
        case ErrorKind::FullCircleCorridor: return "FullCircleCorridor";
        case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
        case ErrorKind::MethodInapplicable: return "MethodInapplicable";
        case ErrorKind::InternalInvariantViolated: return "InternalInvariantViolated";
    }
    return "Unknown";
}

ErrorCategory category(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotCylindrical:
        case ErrorKind::NotMonotone:
        case ErrorKind::NotStronglyCMonotone:
        case ErrorKind::NotSpecialTree:
        case ErrorKind::NotDoubleStar:
        case ErrorKind::NotTwinStar:
        case ErrorKind::MethodInapplicable:
        case ErrorKind::TooLarge:
            return ErrorCategory::Inapplicable;
        case ErrorKind::InternalInvariantViolated:
        case ErrorKind::NoSideEdge:
        case ErrorKind::RelationCyclic:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::InvalidInput;
    }
}

}  // namespace cst
