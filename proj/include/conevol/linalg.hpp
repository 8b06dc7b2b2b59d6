#pragma once

#include <optional>

#include "conevol/common.hpp"

// Dense small-dimension linear algebra on std::vector<double>. Everything here
// is sized for n <= ~8; partial pivoting only.

namespace conevol::linalg {

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double s);
Vec normalized(const Vec& a);  // throws input_error on near-zero vectors

// Solves A x = b by Gaussian elimination with partial pivoting.
// A is row-major n x n. Returns nullopt when the pivot falls below tol.
std::optional<Vec> solve(std::vector<Vec> rows, Vec rhs, double tol = 1e-12);

// Unit normal + offset of the hyperplane through d affinely independent
// points in R^d; nullopt when the points are (numerically) degenerate.
std::optional<std::pair<Vec, double>> hyperplane_through(const std::vector<Vec>& pts,
                                                         double tol = 1e-10);

// Orthonormal basis of the complement of u (u must be unit): n-1 vectors.
std::vector<Vec> orthonormal_complement(const Vec& u);

// Orthonormalizes the given spanning set; result has rank() vectors.
std::vector<Vec> orthonormal_basis(const std::vector<Vec>& span, double tol = 1e-10);

// Rank of the difference set {p_i - p_0} with column scaling tolerance.
int affine_rank(const std::vector<Vec>& pts, double tol = 1e-9);

// Rank of a set of vectors.
int rank(std::vector<Vec> rows, double tol = 1e-9);

// Applies a row-major orthogonal matrix.
Vec mat_apply(const std::vector<Vec>& rows, const Vec& x);

}  // namespace conevol::linalg
