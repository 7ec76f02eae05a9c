#pragma once

#include <stdexcept>
#include <string>

namespace cglasso {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonFinite : public Error {
 public:
  explicit NonFinite(const std::string& where)
      : Error("non-finite value in " + where) {}
};

class NotSymmetric : public Error {
 public:
  explicit NotSymmetric(double max_dev)
      : Error("matrix is not symmetric (max deviation " +
              std::to_string(max_dev) + ")") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, long a, long b)
      : Error("dimension mismatch in " + what + ": " + std::to_string(a) +
              " vs " + std::to_string(b)) {}
};

class ConstantColumn : public Error {
 public:
  explicit ConstantColumn(int column)
      : Error("column " + std::to_string(column) + " has zero variance"),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

class InvalidK : public Error {
 public:
  InvalidK(int k, int p)
      : Error("cluster count k=" + std::to_string(k) + " outside [1, " +
              std::to_string(p) + "]") {}
};

class SingleLeaf : public Error {
 public:
  SingleLeaf() : Error("dendrogram has a single leaf, no merges") {}
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& where)
      : Error("matrix not positive definite in " + where) {}
};

class NonPositiveDiagonal : public Error {
 public:
  explicit NonPositiveDiagonal(int index)
      : Error("covariance diagonal entry " + std::to_string(index) +
              " is not strictly positive") {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(const std::string& what, std::size_t got, std::size_t want)
      : Error("length mismatch in " + what + ": got " + std::to_string(got) +
              ", expected " + std::to_string(want)) {}
};

class InvalidAlpha : public Error {
 public:
  explicit InvalidAlpha(double alpha)
      : Error("alpha=" + std::to_string(alpha) + " outside (0, 1)") {}
};

class InsufficientN : public Error {
 public:
  explicit InsufficientN(long n)
      : Error("n=" + std::to_string(n) + " too small") {}
};

class DegenerateRepeat : public Error {
 public:
  DegenerateRepeat()
      : Error("missing-element pattern left a row with no observed "
              "off-diagonal entries after 10 retries") {}
};

class BlockTooLarge : public Error {
 public:
  BlockTooLarge(int pk, int limit)
      : Error("incoherence block size " + std::to_string(pk) + " exceeds " +
              std::to_string(limit)) {}
};

class SingularGamma : public Error {
 public:
  SingularGamma() : Error("Gamma_FF is numerically singular") {}
};

class EmptyEdgeSet : public Error {
 public:
  EmptyEdgeSet() : Error("edge set is empty") {}
};

class FactorizationFailed : public Error {
 public:
  explicit FactorizationFailed(const std::string& where)
      : Error("positive-definite factorization failed in " + where) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Wraps a per-cluster solver failure with the cluster index.
class ClusterSolveError : public Error {
 public:
  ClusterSolveError(int cluster, const std::string& msg)
      : Error("cluster " + std::to_string(cluster) + ": " + msg),
        cluster_(cluster) {}
  int cluster() const { return cluster_; }

 private:
  int cluster_;
};

}  // namespace cglasso
