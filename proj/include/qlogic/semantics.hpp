#pragma once

// Evaluation of formulas under three semantics sharing one grammar:
//
//   quantum       atoms are subspaces; & = meet, | = join, ~ = orthocomplement.
//   weak-heyting  atoms are ray sets;  & = ∩, | = ∪, ~ = pseudo-negation,
//                 -> = weak-Heyting implication.
//   classical     atoms are ray sets;  & = ∩, | = ∪, ! = complement,
//                 A -> B = !A | B.
//
// A connective outside the selected semantics is an error, never coerced.

#include <qlogic/formula.hpp>
#include <qlogic/rayset.hpp>

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

namespace qlogic {

enum class Semantics { kQuantum, kWeakHeyting, kClassical };

inline std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::kQuantum: return "quantum";
    case Semantics::kWeakHeyting: return "weak-heyting";
    case Semantics::kClassical: return "classical";
  }
  return "?";
}

inline Semantics parse_semantics(const std::string& name) {
  if (name == "quantum") return Semantics::kQuantum;
  if (name == "weak-heyting") return Semantics::kWeakHeyting;
  if (name == "classical") return Semantics::kClassical;
  throw std::invalid_argument("unknown semantics '" + name + "'");
}

/// A connective that the selected semantics does not interpret.
class UnsupportedConnective : public std::runtime_error {
 public:
  UnsupportedConnective(const std::string& connective, Semantics s)
      : std::runtime_error("connective '" + connective + "' is not available in " + to_string(s) +
                           " semantics") {}
};

class UnboundAtom : public std::runtime_error {
 public:
  explicit UnboundAtom(const std::string& name, const std::string& why = "is not bound")
      : std::runtime_error("atom '" + name + "' " + why) {}
};

/// Named subspaces and ray sets over one ambient space C^d.
class Context {
 public:
  explicit Context(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  }

  std::size_t dim() const { return dim_; }

  void add(const std::string& name, Subspace k) {
    require_same_dim(k.ambient_dim(), dim_);
    check_fresh(name);
    subspaces_.emplace(name, std::move(k));
  }
  void add(const std::string& name, RaySet s) {
    require_same_dim(s.ambient_dim(), dim_);
    check_fresh(name);
    raysets_.emplace(name, std::move(s));
  }

  const Subspace* subspace(const std::string& name) const {
    auto it = subspaces_.find(name);
    return it == subspaces_.end() ? nullptr : &it->second;
  }
  const RaySet* rayset(const std::string& name) const {
    auto it = raysets_.find(name);
    return it == raysets_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, Subspace>& subspaces() const { return subspaces_; }
  const std::map<std::string, RaySet>& raysets() const { return raysets_; }

 private:
  void check_fresh(const std::string& name) const {
    if (subspaces_.count(name) || raysets_.count(name))
      throw std::invalid_argument("name '" + name + "' is already declared");
  }

  std::size_t dim_;
  std::map<std::string, Subspace> subspaces_;
  std::map<std::string, RaySet> raysets_;
};

using Value = std::variant<Subspace, RaySet>;

inline std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

namespace detail {

inline std::string connective_symbol(Connective c) {
  switch (c) {
    case Connective::kAnd: return "&";
    case Connective::kOr: return "|";
    case Connective::kWeakNeg: return "~";
    case Connective::kClassicalNeg: return "!";
    case Connective::kImplies: return "->";
    default: return "?";
  }
}

inline Subspace eval_quantum(const Formula& f, const Context& ctx) {
  switch (f.kind()) {
    case Connective::kAtom:
      if (const auto* k = ctx.subspace(f.name())) return *k;
      if (ctx.rayset(f.name())) throw UnboundAtom(f.name(), "names a ray set, not a subspace");
      throw UnboundAtom(f.name());
    case Connective::kTop: return Subspace::full(ctx.dim());
    case Connective::kBottom: return Subspace::zero(ctx.dim());
    case Connective::kAnd: return meet(eval_quantum(f.lhs(), ctx), eval_quantum(f.rhs(), ctx));
    case Connective::kOr: return join(eval_quantum(f.lhs(), ctx), eval_quantum(f.rhs(), ctx));
    case Connective::kWeakNeg: return ortho(eval_quantum(f.lhs(), ctx));
    default: throw UnsupportedConnective(connective_symbol(f.kind()), Semantics::kQuantum);
  }
}

/// `semantics` empty means every ray-set connective is allowed (context declarations).
inline RaySet eval_rays(const Formula& f, const Context& ctx, std::optional<Semantics> semantics) {
  auto sub = [&](const Formula& g) { return eval_rays(g, ctx, semantics); };
  auto reject_unless = [&](bool allowed) {
    if (!allowed) throw UnsupportedConnective(connective_symbol(f.kind()), *semantics);
  };
  switch (f.kind()) {
    case Connective::kAtom:
      if (const auto* s = ctx.rayset(f.name())) return *s;
      if (const auto* k = ctx.subspace(f.name())) return embed_r(*k);
      throw UnboundAtom(f.name());
    case Connective::kTop: return RaySet::top(ctx.dim());
    case Connective::kBottom: return RaySet::empty(ctx.dim());
    case Connective::kAnd: return intersect(sub(f.lhs()), sub(f.rhs()));
    case Connective::kOr: return unite(sub(f.lhs()), sub(f.rhs()));
    case Connective::kWeakNeg:
      if (semantics) reject_unless(*semantics == Semantics::kWeakHeyting);
      return pseudo_neg(sub(f.lhs()));
    case Connective::kClassicalNeg:
      if (semantics) reject_unless(*semantics == Semantics::kClassical);
      return complement(sub(f.lhs()));
    case Connective::kImplies:
      if (semantics == Semantics::kClassical) return unite(complement(sub(f.lhs())), sub(f.rhs()));
      return implies(sub(f.lhs()), sub(f.rhs()));
  }
  throw std::logic_error("unhandled connective");
}

}  // namespace detail

inline Value eval(const Formula& f, const Context& ctx, Semantics semantics) {
  if (semantics == Semantics::kQuantum) return detail::eval_quantum(f, ctx);
  return detail::eval_rays(f, ctx, semantics);
}

/// Ray-set expression with the full connective set, as used by `set` declarations.
inline RaySet eval_rayset_expression(const Formula& f, const Context& ctx) {
  return detail::eval_rays(f, ctx, std::nullopt);
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// `span(VEC, ...)`, `full` or `zero`; `offset` is where `text` starts in its line.
inline Subspace parse_subspace_rhs(std::string_view text, std::size_t offset, std::size_t dim) {
  const std::string t = trim(text);
  if (t == "full") return Subspace::full(dim);
  if (t == "zero") return Subspace::zero(dim);
  const std::size_t lead = text.find_first_not_of(" \t");
  if (t.rfind("span(", 0) != 0 || t.back() != ')')
    throw ParseError(offset + lead, "expected span(...), full or zero");
  std::vector<Vector> generators;
  std::size_t pos = 5, depth = 0, start = 5;
  const std::string_view inner(t.data(), t.size() - 1);
  for (; pos <= inner.size(); ++pos) {
    const char c = pos < inner.size() ? inner[pos] : ',';
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) throw ParseError(offset + lead + pos, "unbalanced ')'");
      --depth;
    }
    if (c == ',' && depth == 0) {
      const std::string piece = trim(inner.substr(start, pos - start));
      if (!piece.empty()) {
        const std::size_t piece_at = offset + lead + start + inner.substr(start).find_first_not_of(" \t");
        Vector v = parse_vector(piece, piece_at);
        require_same_dim(v.dim(), dim);
        generators.push_back(std::move(v));
      } else if (pos < inner.size() || !generators.empty()) {
        throw ParseError(offset + lead + pos, "empty generator");
      }
      start = pos + 1;
    }
  }
  if (depth != 0) throw ParseError(offset + lead + inner.size(), "unbalanced '('");
  return Subspace::span(generators, dim);
}

}  // namespace detail

/// Context file: `space dim=<d>` first, then
///   sub NAME = span(VEC, ...) | full | zero
///   set NAME = r(SUBNAME) | EXPR
/// `#` starts a comment. Errors carry the line number.
inline Context parse_context(std::istream& in) {
  std::optional<Context> ctx;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (detail::trim(line).empty()) continue;
    auto fail = [&](std::size_t offset, const std::string& what) {
      throw ParseError(offset, "line " + std::to_string(line_no) + ": " + what);
    };
    try {
      std::istringstream words(line);
      std::string keyword;
      words >> keyword;
      if (keyword == "space") {
        std::string arg, extra;
        words >> arg;
        if (ctx) fail(0, "duplicate 'space' declaration");
        if (arg.rfind("dim=", 0) != 0 || (words >> extra)) fail(0, "expected 'space dim=<d>'");
        std::size_t dim = 0;
        try {
          dim = std::stoul(arg.substr(4));
        } catch (const std::exception&) {
          fail(0, "bad dimension");
        }
        if (dim == 0) fail(0, "dimension must be positive");
        ctx.emplace(dim);
        continue;
      }
      if (keyword != "sub" && keyword != "set") fail(0, "unknown declaration '" + keyword + "'");
      if (!ctx) fail(0, "'space dim=<d>' must come first");
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) fail(0, "expected '='");
      const std::size_t kw_end = line.find(keyword) + keyword.size();
      const std::string name = detail::trim(std::string_view(line).substr(kw_end, eq - kw_end));
      if (name.empty() || name.find_first_of(" \t()&|~!-") != std::string::npos || name == "top" || name == "bot")
        fail(kw_end, "bad name '" + name + "'");
      const std::string_view rhs = std::string_view(line).substr(eq + 1);
      if (keyword == "sub") {
        ctx->add(name, detail::parse_subspace_rhs(rhs, eq + 1, ctx->dim()));
        continue;
      }
      const std::string expr = detail::trim(rhs);
      if (expr.rfind("r(", 0) == 0 && expr.back() == ')') {
        const std::string target = detail::trim(std::string_view(expr).substr(2, expr.size() - 3));
        const Subspace* k = ctx->subspace(target);
        if (!k) fail(eq + 1, "r(...) needs a declared subspace, got '" + target + "'");
        ctx->add(name, embed_r(*k));
        continue;
      }
      ctx->add(name, eval_rayset_expression(parse_formula(rhs, eq + 1), *ctx));
    } catch (const ParseError& e) {
      if (e.detail().rfind("line ", 0) == 0) throw;
      throw ParseError(e.offset(), "line " + std::to_string(line_no) + ": " + e.detail());
    } catch (const std::exception& e) {
      throw ParseError(0, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!ctx) throw ParseError(0, "missing 'space dim=<d>' declaration");
  return std::move(*ctx);
}

}  // namespace qlogic
