#include "coalg/hopf/matrix_comonoid.hpp"

#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

std::string entry(std::size_t i, std::size_t j) { return "X" + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

MatrixComonoid matrix_comonoid(std::size_t n) {
  if (n == 0) throw Error("bad-size", "matrix size must be positive");
  if (n > 3) throw Error("cap-exceeded", "symbolic matrix comonoid is limited to n <= 3");
  const auto ring = comm_ring_backend();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back(entry(i, j));
  const auto carrier = CarrierObject::free_on(ring, names);
  const auto two = copower(carrier, 2);
  const auto none = copower(carrier, 0);
  const auto& P = *two.object();
  std::vector<Element> mult, unit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = P.apply("zero", {});
      for (std::size_t k = 0; k < n; ++k) {
        const std::vector<Element> factors{two.injection(0)(carrier->generator(i * n + k)),
                                           two.injection(1)(carrier->generator(k * n + j))};
        const std::vector<Element> sum{acc, P.apply("times", factors)};
        acc = P.apply("plus", sum);
      }
      mult.push_back(std::move(acc));
      unit.push_back(none.object()->apply(i == j ? "one" : "zero", {}));
    }
  Coalgebra c("M" + std::to_string(n), monoid_backend()->presentation(), carrier,
              {{"m", Hom(carrier, two.object(), std::move(mult))}, {"e", Hom(carrier, none.object(), std::move(unit))}});
  auto report = verify_coalgebra(c);
  return {n, std::move(c), std::move(report)};
}

ObjectPtr ring_as_cring(const RingPtr& ring) {
  if (!ring->is_commutative()) throw Error("not-commutative", ring->name() + " is not commutative");
  const auto backend = comm_ring_backend();
  const auto& R = *ring;
  auto alg = FiniteAlgebra::from_function(backend->signature(), R.size(),
                                          [&](std::size_t op, std::span<const std::size_t> a) -> std::size_t {
                                            const auto& name = backend->signature().op(op).name;
                                            if (name == "plus") return R.add(a[0], a[1]);
                                            if (name == "zero") return R.zero();
                                            if (name == "neg") return R.neg(a[0]);
                                            if (name == "times") return R.mul(a[0], a[1]);
                                            return R.one();
                                          });
  return CarrierObject::finite(backend, std::move(alg));
}

InducedMonoidCheck check_induced_monoid(const MatrixComonoid& c, const RingPtr& ring) {
  const auto& R = *ring;
  const auto n = c.n;
  const auto k = n * n;
  const auto target = ring_as_cring(ring);
  const auto& carrier = c.comonoid.carrier();
  const auto& two = c.comonoid.copower(2);
  const auto& none = c.comonoid.copower(0);
  const auto& mult = c.comonoid.coop("m");

  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= R.size();
  if (count > 4096) throw Error("cap-exceeded", "too many matrices over " + R.name());
  std::vector<std::vector<std::size_t>> matrices(count, std::vector<std::size_t>(k));
  std::vector<Hom> homs;
  for (std::size_t x = 0; x < count; ++x) {
    std::size_t v = x;
    std::vector<Element> images(k);
    for (std::size_t p = k; p-- > 0;) {
      matrices[x][p] = v % R.size();
      v /= R.size();
      images[p] = Element::index(matrices[x][p]);
    }
    homs.emplace_back(carrier, target, std::move(images));
  }

  InducedMonoidCheck out;
  auto show = [&](const std::vector<std::size_t>& m) {
    std::string s = "[";
    for (std::size_t p = 0; p < k; ++p) s += (p ? (p % n ? " " : "; ") : "") + std::to_string(m[p]);
    return s + "]";
  };
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      ++out.pairs;
      const std::vector<Hom> pair{homs[a], homs[b]};
      const auto product = compose(copair(two, pair, target), mult);
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i)
        for (std::size_t j = 0; j < n && same; ++j) {
          std::size_t expected = R.zero();
          for (std::size_t l = 0; l < n; ++l)
            expected = R.add(expected, R.mul(matrices[a][i * n + l], matrices[b][l * n + j]));
          same = product(carrier->generator(i * n + j)).as_index() == expected;
        }
      if (same)
        ++out.agreeing;
      else if (out.witness.empty())
        out.witness = show(matrices[a]) + " * " + show(matrices[b]);
    }
  const auto unit = compose(copair(none, std::vector<Hom>{}, target), c.comonoid.coop("e"));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (unit(carrier->generator(i * n + j)).as_index() != (i == j ? R.one() : R.zero())) {
        out.unit_ok = false;
        if (out.witness.empty()) out.witness = "unit differs at " + entry(i, j);
      }
  return out;
}

}  // namespace coalg
