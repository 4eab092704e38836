#pragma once

#include <vector>

#include "galmck/numth.hpp"

namespace galmck::intmat {

using Mat = std::vector<std::vector<long>>;

Mat identity(int n);
Mat mul(const Mat& a, const Mat& b);
std::vector<long> mul_vec(const Mat& a, const std::vector<long>& v);
Mat transpose(const Mat& a);
long det(Mat a);
// inverse of a unimodular integer matrix
Mat inv_unimodular(const Mat& a);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// d1 | d2 | ... (nonnegative). Square A only.
struct Smith {
  Mat U, V, D;
};
Smith smith_normal_form(Mat a);

}  // namespace galmck::intmat
