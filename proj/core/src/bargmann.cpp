#include "qfock/bargmann.hpp"

#include <cmath>
#include <string>

#include "qfock/analytic.hpp"
#include "qfock/qnumbers.hpp"

namespace qfock {
namespace {

void require_same_nodes(const JacksonFunction& a, const JacksonFunction& b) {
  if (!(a.nodes == b.nodes)) throw ConfigError("Jackson functions live on different node sets");
}

}  // namespace

JacksonFunction JacksonFunction::zero(const JacksonNodes& nodes) {
  return {nodes, std::vector<cplx>(nodes.size(), 0.0)};
}

JacksonFunction JacksonFunction::from(const QHermiteFunction& h, const JacksonNodes& nodes) {
  if (h.values.size() != nodes.size()) throw ConfigError("Hermite function does not match the node set");
  return {nodes, std::vector<cplx>(h.values.begin(), h.values.end())};
}

JacksonFunction& JacksonFunction::operator+=(const JacksonFunction& o) {
  require_same_nodes(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

JacksonFunction& JacksonFunction::operator*=(cplx s) {
  for (auto& v : values) v *= s;
  return *this;
}

cplx l2_inner(const JacksonFunction& f, const JacksonFunction& g) {
  require_same_nodes(f, g);
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += f.nodes.weight(i) * f.values[i] * std::conj(g.values[i]);
  return s;
}

BargmannKernelTable::BargmannKernelTable(int modes, const QContext& ctx)
    : modes_(modes), ctx_(ctx), nodes_(ctx) {
  if (modes < 1) throw ConfigError("BargmannKernelTable: need at least one mode");
  hermite_ = qhermite_functions(modes - 1, nodes_, ctx);
  inv_sqrt_fact_.resize(modes);
  weighted_.resize(modes, static_cast<Eigen::Index>(nodes_.size()));
  for (int n = 0; n < modes; ++n) {
    inv_sqrt_fact_[n] = 1.0 / std::sqrt(q_factorial(n, ctx));
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      weighted_(n, static_cast<Eigen::Index>(i)) = nodes_.weight(i) * hermite_[n].values[i];
    }
  }
}

JacksonFunction BargmannKernelTable::hermite_function(int n) const {
  return JacksonFunction::from(hermite_.at(n), nodes_);
}

FockElement bargmann_forward(const JacksonFunction& f, const BargmannKernelTable& table) {
  if (!(f.nodes == table.nodes())) throw ConfigError("bargmann_forward: node set mismatch");
  std::vector<cplx> b(table.modes());
  const auto& W = table.weighted_modes();
  for (int n = 0; n < table.modes(); ++n) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) s += W(n, static_cast<Eigen::Index>(i)) * f.values[i];
    b[n] = table.inv_sqrt_factorial(n) * s;
  }
  return FockElement(std::move(b), table.ctx());
}

JacksonFunction bargmann_adjoint(const FockElement& F, const BargmannKernelTable& table) {
  auto out = JacksonFunction::zero(table.nodes());
  for (int n = 0; n < std::min(F.size(), table.modes()); ++n) {
    const cplx c = F.coeff(n) / table.inv_sqrt_factorial(n);
    const auto& h = table.hermite(n).values;
    for (std::size_t i = 0; i < h.size(); ++i) out.values[i] += c * h[i];
  }
  return out;
}

GramReport bargmann_unitarity_gram(const BargmannKernelTable& table) {
  const int M = table.modes();
  std::vector<FockElement> images;
  std::vector<std::string> labels;
  for (int m = 0; m < M; ++m) {
    images.push_back(bargmann_forward(table.hermite_function(m), table));
    labels.push_back(std::to_string(m));
  }
  Eigen::MatrixXcd G(M, M);
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) G(i, j) = fischer_inner(images[i], images[j]);
  }
  return make_gram_report("bargmann-gram", std::move(labels), std::move(G),
                          Eigen::MatrixXcd::Identity(M, M));
}

GramReport bargmann_unitarity_gram(int modes, const QContext& ctx) {
  return bargmann_unitarity_gram(BargmannKernelTable(modes, ctx));
}

JacksonFunction coherent_state(cplx z, const BargmannKernelTable& table) {
  const QContext& ctx = table.ctx();
  if (!(std::abs(z) < 1.0 / (1.0 - ctx.q()))) throw DomainError("coherent_state: |z| must be below 1/(1-q)");
  auto out = JacksonFunction::zero(table.nodes());
  for (int n = 0; n < table.modes(); ++n) {
    const cplx c = zq_value(n, z, ctx) * table.inv_sqrt_factorial(n);
    const auto& h = table.hermite(n).values;
    for (std::size_t i = 0; i < h.size(); ++i) out.values[i] += c * h[i];
  }
  return out;
}

cplx tensor_inner(const TensorFockElement& a, const TensorFockElement& b) {
  if (a.c.rows() != b.c.rows() || a.c.cols() != b.c.cols()) throw ConfigError("tensor_inner: shape mismatch");
  return (a.c.array() * b.c.conjugate().array()).sum();
}

TensorFockElement tensor_forward(const TensorJacksonFunction& F, const BargmannKernelTable& table) {
  const auto n = static_cast<Eigen::Index>(table.nodes().size());
  if (F.rows() != n || F.cols() != n) throw ConfigError("tensor_forward: F must be sampled on the product node grid");
  const Eigen::MatrixXcd A = table.weighted_modes().cast<cplx>();
  return {A * F * A.transpose()};
}

GramReport tensor_unitarity_gram(const BargmannKernelTable& table) {
  const int M = table.modes();
  std::vector<TensorFockElement> images;
  std::vector<std::string> labels;
  std::vector<Eigen::VectorXcd> h(M);
  for (int k = 0; k < M; ++k) {
    const auto& v = table.hermite(k).values;
    h[k] = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())).cast<cplx>();
  }
  for (int k = 0; k < M; ++k) {
    for (int l = 0; l < M; ++l) {
      images.push_back(tensor_forward(h[k] * h[l].transpose(), table));
      labels.push_back(std::to_string(k) + "," + std::to_string(l));
    }
  }
  const auto n = static_cast<Eigen::Index>(images.size());
  Eigen::MatrixXcd G(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) G(i, j) = tensor_inner(images[i], images[j]);
  }
  return make_gram_report("tensor-gram", std::move(labels), std::move(G), Eigen::MatrixXcd::Identity(n, n));
}

}  // namespace qfock
