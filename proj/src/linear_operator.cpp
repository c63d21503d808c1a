#include "fock/linear_operator.hpp"

#include <stdexcept>

namespace fock {

struct LinearOperator::Node {
  Kind kind;
  unsigned axis = 0;
  GaussianRational scalar;
  PolyField field;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

void check_axis(unsigned axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range");
}

}  // namespace

LinearOperator LinearOperator::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::partial(unsigned axis) {
  check_axis(axis);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Partial;
  n->axis = axis;
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::coordinate_mul(unsigned axis) {
  check_axis(axis);
  auto n = std::make_shared<Node>();
  n->kind = Kind::CoordinateMul;
  n->axis = axis;
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::ring_mul(PolyField g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::RingMul;
  n->field = std::move(g);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::euler_degree() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::EulerDegree;
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::laplacian() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Laplacian;
  return LinearOperator(std::move(n));
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  auto n = std::make_shared<LinearOperator::Node>();
  n->kind = LinearOperator::Kind::Compose;
  n->kids = {a.node_, b.node_};
  return LinearOperator(std::move(n));
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  auto n = std::make_shared<LinearOperator::Node>();
  n->kind = LinearOperator::Kind::Add;
  n->kids = {a.node_, b.node_};
  return LinearOperator(std::move(n));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  return a + scale(GaussianRational(-1), b);
}

LinearOperator scale(GaussianRational c, const LinearOperator& a) {
  auto n = std::make_shared<LinearOperator::Node>();
  n->kind = LinearOperator::Kind::Scale;
  n->scalar = std::move(c);
  n->kids = {a.node_};
  return LinearOperator(std::move(n));
}

PolyField LinearOperator::apply_node(const Node& n, const PolyField& f) {
  using Kind = LinearOperator::Kind;
  switch (n.kind) {
    case Kind::Identity:
      return f;
    case Kind::Partial:
      return f.partial_derivative(n.axis);
    case Kind::CoordinateMul:
      return f.coordinate_multiply(n.axis);
    case Kind::RingMul:
      return n.field * f;
    case Kind::EulerDegree:
      return f.euler_degree();
    case Kind::Laplacian:
      return f.laplacian();
    case Kind::Compose:
      return apply_node(*n.kids[0], apply_node(*n.kids[1], f));
    case Kind::Add: {
      PolyField acc;
      for (const auto& k : n.kids) acc = acc + apply_node(*k, f);
      return acc;
    }
    case Kind::Scale:
      return apply_node(*n.kids[0], f).scalar_mul(n.scalar);
  }
  throw std::logic_error("unreachable operator kind");
}

PolyField LinearOperator::apply(const PolyField& f) const {
  return apply_node(*node_, f);
}

LinearOperator::Kind LinearOperator::kind() const { return node_->kind; }

unsigned LinearOperator::axis() const {
  if (node_->kind != Kind::Partial && node_->kind != Kind::CoordinateMul)
    throw std::logic_error("node has no axis");
  return node_->axis;
}

const GaussianRational& LinearOperator::scalar() const {
  if (node_->kind != Kind::Scale) throw std::logic_error("node has no scalar");
  return node_->scalar;
}

const PolyField& LinearOperator::field() const {
  if (node_->kind != Kind::RingMul) throw std::logic_error("node has no field");
  return node_->field;
}

std::size_t LinearOperator::child_count() const { return node_->kids.size(); }

LinearOperator LinearOperator::child(std::size_t i) const {
  if (i >= node_->kids.size()) throw std::out_of_range("operator child index");
  return LinearOperator(node_->kids[i]);
}

}  // namespace fock
