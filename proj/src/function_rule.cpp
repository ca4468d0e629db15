#include "acfc/function_rule.hpp"

#include <sstream>
#include <utility>
#include <variant>

#include "acfc/errors.hpp"

namespace acfc {

namespace {

struct Polynomial {
  std::vector<Scalar> coeffs;
};

struct Interval {
  std::optional<Rational> lo;
  bool loClosed;
  std::optional<Rational> hi;
  bool hiClosed;

  bool contains(const Rational& t) const {
    if (lo && (t < *lo || (t == *lo && !loClosed))) return false;
    if (hi && (t > *hi || (t == *hi && !hiClosed))) return false;
    return true;
  }
  // Points t + delta for all small delta > 0.
  bool containsRightNeighbourhood(const Rational& t) const {
    return (!lo || *lo <= t) && (!hi || *hi > t);
  }
  bool containsLeftNeighbourhood(const Rational& t) const {
    return (!lo || *lo < t) && (!hi || *hi >= t);
  }
};

struct Point {
  Rational at;
};

struct Custom {
  std::function<Scalar(const Rational&)> fn;
};

enum class Combine { Sum, Product };

}  // namespace

struct FunctionRule::Node {
  struct Binary {
    Combine op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  struct Scaled {
    Scalar c;
    std::shared_ptr<const Node> arg;
  };

  std::variant<Polynomial, Interval, Point, Custom, Binary, Scaled> body;
  std::string id;
};

namespace {

using Node = FunctionRule::Node;

std::string formatScalar(Scalar c) {
  std::ostringstream os;
  os.precision(17);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

Scalar evalNode(const Node& node, const Rational& t) {
  return std::visit(
      [&](const auto& b) -> Scalar {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Polynomial>) {
          const double x = t.toDouble();
          Scalar acc = 0.0;
          for (auto it = b.coeffs.rbegin(); it != b.coeffs.rend(); ++it) acc = acc * x + *it;
          return acc;
        } else if constexpr (std::is_same_v<B, Interval>) {
          return b.contains(t) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<B, Point>) {
          return t == b.at ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<B, Custom>) {
          return b.fn(t);
        } else if constexpr (std::is_same_v<B, Node::Binary>) {
          const Scalar l = evalNode(*b.lhs, t);
          const Scalar r = evalNode(*b.rhs, t);
          return b.op == Combine::Sum ? l + r : l * r;
        } else {
          return b.c * evalNode(*b.arg, t);
        }
      },
      node.body);
}

Scalar limitNode(const Node& node, const Rational& t, bool fromRight) {
  return std::visit(
      [&](const auto& b) -> Scalar {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Polynomial>) {
          return evalNode(node, t);
        } else if constexpr (std::is_same_v<B, Interval>) {
          const bool inside =
              fromRight ? b.containsRightNeighbourhood(t) : b.containsLeftNeighbourhood(t);
          return inside ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<B, Point>) {
          return 0.0;
        } else if constexpr (std::is_same_v<B, Custom>) {
          throw UnsupportedRule("rule '" + node.id + "' has no exact limit");
        } else if constexpr (std::is_same_v<B, Node::Binary>) {
          const Scalar l = limitNode(*b.lhs, t, fromRight);
          const Scalar r = limitNode(*b.rhs, t, fromRight);
          return b.op == Combine::Sum ? l + r : l * r;
        } else {
          return b.c * limitNode(*b.arg, t, fromRight);
        }
      },
      node.body);
}

bool exactNode(const Node& node) {
  return std::visit(
      [](const auto& b) -> bool {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Custom>) {
          return false;
        } else if constexpr (std::is_same_v<B, Node::Binary>) {
          return exactNode(*b.lhs) && exactNode(*b.rhs);
        } else if constexpr (std::is_same_v<B, Node::Scaled>) {
          return exactNode(*b.arg);
        } else {
          return true;
        }
      },
      node.body);
}

std::string intervalId(const Interval& iv) {
  std::string s = "chi:";
  s += iv.lo ? (iv.loClosed ? "[" : "(") : "(";
  s += iv.lo ? iv.lo->toString() : "-inf";
  s += ",";
  s += iv.hi ? iv.hi->toString() : "inf";
  s += iv.hi ? (iv.hiClosed ? "]" : ")") : ")";
  return s;
}

std::string polynomialId(const std::vector<Scalar>& ascending) {
  std::string s = "poly:";
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    if (it != ascending.rbegin()) s += ",";
    s += formatScalar(*it);
  }
  return s;
}

}  // namespace

FunctionRule FunctionRule::polynomial(std::vector<Scalar> ascending) {
  if (ascending.empty()) ascending.push_back(0.0);
  auto node = std::make_shared<Node>();
  node->id = polynomialId(ascending);
  node->body = Polynomial{std::move(ascending)};
  return FunctionRule(std::move(node));
}

FunctionRule FunctionRule::constant(Scalar c) { return polynomial({c}); }

FunctionRule FunctionRule::identity() { return polynomial({0.0, 1.0}); }

FunctionRule FunctionRule::interval(std::optional<Rational> lo, bool loClosed,
                                    std::optional<Rational> hi, bool hiClosed) {
  Interval iv{lo, lo && loClosed, hi, hi && hiClosed};
  auto node = std::make_shared<Node>();
  node->id = intervalId(iv);
  node->body = iv;
  return FunctionRule(std::move(node));
}

FunctionRule FunctionRule::point(Rational a) {
  auto node = std::make_shared<Node>();
  node->id = "chi_point_" + a.toString();
  node->body = Point{a};
  return FunctionRule(std::move(node));
}

FunctionRule FunctionRule::custom(std::string name, std::function<Scalar(const Rational&)> fn) {
  auto node = std::make_shared<Node>();
  node->id = std::move(name);
  node->body = Custom{std::move(fn)};
  return FunctionRule(std::move(node));
}

Scalar FunctionRule::operator()(const Rational& t) const { return evalNode(*node_, t); }

Scalar FunctionRule::limitFromRight(const Rational& t) const { return limitNode(*node_, t, true); }

Scalar FunctionRule::limitFromLeft(const Rational& t) const { return limitNode(*node_, t, false); }

bool FunctionRule::hasExactLimits() const { return exactNode(*node_); }

const std::string& FunctionRule::id() const { return node_->id; }

FunctionRule FunctionRule::withId(std::string id) const {
  auto node = std::make_shared<Node>(*node_);
  node->id = std::move(id);
  return FunctionRule(std::move(node));
}

FunctionRule operator+(const FunctionRule& f, const FunctionRule& g) {
  auto node = std::make_shared<FunctionRule::Node>();
  node->id = "(" + f.id() + ")+(" + g.id() + ")";
  node->body = FunctionRule::Node::Binary{Combine::Sum, f.node_, g.node_};
  return FunctionRule(std::move(node));
}

FunctionRule operator*(const FunctionRule& f, const FunctionRule& g) {
  auto node = std::make_shared<FunctionRule::Node>();
  node->id = "(" + f.id() + ")*(" + g.id() + ")";
  node->body = FunctionRule::Node::Binary{Combine::Product, f.node_, g.node_};
  return FunctionRule(std::move(node));
}

FunctionRule operator*(Scalar c, const FunctionRule& f) {
  auto node = std::make_shared<FunctionRule::Node>();
  node->id = formatScalar(c) + "*(" + f.id() + ")";
  node->body = FunctionRule::Node::Scaled{c, f.node_};
  return FunctionRule(std::move(node));
}

}  // namespace acfc
