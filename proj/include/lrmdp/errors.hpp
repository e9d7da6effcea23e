#pragma once

#include <stdexcept>
#include <string>

namespace lrmdp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A transition row cannot be turned into a distribution (sum below 1e-6 after clipping).
class InvalidModel : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A latent representation was required but not attached to the level.
class MissingLatentRep : public Error {
public:
    using Error::Error;
};

/// A generator exhausted its resampling budget.
class GenerationFailed : public Error {
public:
    using Error::Error;
};

/// A kept slack-matrix row could not be normalized.
class DegenerateRow : public Error {
public:
    using Error::Error;
};

/// A feature table expected to be simplex-valued has negative entries.
class NotSimplex : public Error {
public:
    using Error::Error;
};

/// An iterative planner exceeded its proven iteration cap.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Every candidate pair scored -inf on the dataset.
class AllCandidatesInfeasible : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// The hypothesis family does not contain the true tables of some level.
class RealizabilityViolation : public Error {
public:
    using Error::Error;
};

class NotPSD : public Error {
public:
    using Error::Error;
};

} // namespace lrmdp
