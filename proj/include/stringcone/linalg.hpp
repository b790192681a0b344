#pragma once

#include <vector>

#include "stringcone/rational.hpp"

namespace stringcone {

using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);

// Row rank by fraction-free Gaussian elimination.
int rank_of(Mat m);

// Rank of the affine span of a point set (dimension of the face it spans).
int affine_rank(const std::vector<Vec>& pts);

Rat determinant(Mat m);

// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Mat inverse(const Mat& m);

// Scale a rational vector to a primitive integer vector, preserving direction.
Vec primitive(const Vec& v);

}  // namespace stringcone
