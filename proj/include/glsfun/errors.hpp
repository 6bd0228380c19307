#pragma once

#include <stdexcept>
#include <string>

namespace glsfun {

// Base for all library failures so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A scan found a monotonicity violation. `where` is the abscissa of the worst
// step, `margin` the offending increment (<= 0).
class NotMonotone : public Error {
public:
    NotMonotone(const std::string& what, double where, double margin)
        : Error(what), where(where), margin(margin) {}
    double where;
    double margin;
};

// Strict-increase hypothesis of the forward construction failed.
class NotIncreasing : public NotMonotone {
public:
    NotIncreasing(const std::string& what, double where, double margin)
        : NotMonotone(what, where, margin) {}
};

// Inversion target lies outside the attained range.
class OutOfRange : public Error {
public:
    OutOfRange(const std::string& what, double requested, double lo, double hi)
        : Error(what), requested(requested), attained_lo(lo), attained_hi(hi) {}
    double requested;
    double attained_lo;
    double attained_hi;
};

// A supremum over an unbounded region was still growing at the truncation
// point and no divergence certificate applied; carries the best value seen.
class TruncationUncertain : public Error {
public:
    TruncationUncertain(const std::string& what, double lower_bound)
        : Error(what), lower_bound(lower_bound) {}
    double lower_bound;
};

// The tail bound of a sup over p exceeds the maximum attained in the window.
class TailUncertain : public Error {
public:
    TailUncertain(const std::string& what, double attained, double certificate)
        : Error(what), attained(attained), certificate(certificate) {}
    double attained;
    double certificate;
};

class NonConvex : public Error {
public:
    explicit NonConvex(const std::string& what) : Error(what) {}
};

// Candidate fails the Young-function requirements (vanishes only at zero,
// strictly increasing on the right semi-axis, convex).
class NonYoung : public Error {
public:
    explicit NonYoung(const std::string& what) : Error(what) {}
};

// No admissible patch threshold: elasticity never drops to the requested
// exponent on the scanned interval.
class NoValidC5 : public Error {
public:
    NoValidC5(const std::string& what, double min_elasticity, double at)
        : Error(what), min_elasticity(min_elasticity), at(at) {}
    double min_elasticity;
    double at;
};

// Every candidate constant in a scanned family failed the convexity gate.
class AllNonConvex : public Error {
public:
    explicit AllNonConvex(const std::string& what) : Error(what) {}
};

// Candidate fails the fundamental-function requirements (strict increase,
// decay to zero at the origin).
class InvalidFundamental : public Error {
public:
    explicit InvalidFundamental(const std::string& what) : Error(what) {}
};

// Power extension of an exponential Orlicz function has exponent below one.
class ExtensionNotConvex : public Error {
public:
    ExtensionNotConvex(const std::string& what, double kappa)
        : Error(what), kappa(kappa) {}
    double kappa;
};

}  // namespace glsfun
