#include "reflquot/named_types.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace reflquot {

namespace {

RationalVector diff_unit(std::size_t dim, std::size_t plus, std::size_t minus) {
  RationalVector v(dim);
  v[plus] = 1;
  v[minus] = -1;
  return v;
}

}  // namespace

RootDatum named_root_datum(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  const auto r = static_cast<std::size_t>(rank);
  std::vector<RationalVector> roots;
  std::string name = std::string(1, type) + std::to_string(rank);

  switch (type) {
    case 'A': {
      const std::size_t n = r + 1;
      for (std::size_t i = 0; i < r; ++i) roots.push_back(diff_unit(n, i + 1, i));
      RootDatum d = adapt_simple_system(BilinearForm::standard(n), Lattice::standard(n), roots);
      d.set_name(name);
      return d;
    }
    case 'B': {
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      for (std::size_t i = 0; i + 1 < r; ++i) roots.push_back(diff_unit(r, i, i + 1));
      roots.push_back(RationalVector::unit(r, r - 1));
      RootDatum d = adapt_simple_system(BilinearForm::standard(r), Lattice::standard(r), roots);
      d.set_name(name);
      return d;
    }
    case 'C': {
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      for (std::size_t i = 0; i + 1 < r; ++i) roots.push_back(diff_unit(r, i, i + 1));
      roots.push_back(Rational(2) * RationalVector::unit(r, r - 1));
      // even-sum lattice: e_i - e_{i+1}, plus e_{r-1} + e_r
      std::vector<RationalVector> basis;
      for (std::size_t i = 0; i + 1 < r; ++i) basis.push_back(diff_unit(r, i, i + 1));
      RationalVector last(r);
      last[r - 2] = 1;
      last[r - 1] = 1;
      basis.push_back(std::move(last));
      RootDatum d = adapt_simple_system(BilinearForm::standard(r), Lattice(std::move(basis)), roots);
      d.set_name(name);
      return d;
    }
    case 'D': {
      if (rank < 2) throw std::invalid_argument("type D needs rank >= 2");
      for (std::size_t i = 0; i + 1 < r; ++i) roots.push_back(diff_unit(r, i, i + 1));
      RationalVector last(r);
      last[r - 2] = 1;
      last[r - 1] = 1;
      roots.push_back(std::move(last));
      RootDatum d = adapt_simple_system(BilinearForm::standard(r), Lattice::standard(r), roots);
      d.set_name(name);
      return d;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("type G exists only in rank 2");
      BilinearForm form(RationalMatrix{{2, -3}, {-3, 6}});
      RootDatum d = adapt_simple_system(form, Lattice::standard(2), {RationalVector::unit(2, 0), RationalVector::unit(2, 1)});
      d.set_name(name);
      return d;
    }
    default:
      throw std::invalid_argument(std::string("unknown Cartan type '") + type + "'");
  }
}

RootDatum named_root_datum(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("Cartan type must look like A2, B3, ...: '" + std::string(name) + "'");
  int rank = 0;
  const auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed Cartan type '" + std::string(name) + "'");
  return named_root_datum(name[0], rank);
}

}  // namespace reflquot
