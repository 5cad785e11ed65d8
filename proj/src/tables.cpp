#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "momg/hermite.hpp"
#include "momg/multi_index.hpp"

namespace momg {

const IndexSet& index_set(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IndexSet>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::make_unique<IndexSet>(order)).first;
  return *it->second;
}

double max_hermite_root(int degree) {
  if (degree < 1) throw Error("max_hermite_root: degree must be >= 1");
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(degree, degree);
    for (int k = 1; k < degree; ++k) {
      const double b = std::sqrt(static_cast<double>(k));
      jacobi(k, k - 1) = b;
      jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
      throw Error("max_hermite_root: eigensolver failed");
    it = cache.emplace(degree, solver.eigenvalues().maxCoeff()).first;
  }
  return it->second;
}

}  // namespace momg
