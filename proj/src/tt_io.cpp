#include "ttlearn/tt_io.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ttlearn/numfmt.hpp"

namespace ttlearn {

namespace {

constexpr int kFormatVersion = 1;

void emit_nested(std::ostream& os, const DenseTensor& c, std::size_t axis,
                 std::size_t offset, const std::vector<std::size_t>& strides) {
  if (axis == c.rank()) {
    const cplx v = c[offset];
    os << '[' << g17(v.real()) << ',' << g17(v.imag()) << ']';
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < c.shape()[axis]; ++i) {
    if (i != 0) {
      os << ',';
    }
    emit_nested(os, c, axis + 1, offset + i * strides[axis], strides);
  }
  os << ']';
}

template <typename Train>
void save_train(const Train& t, std::ostream& os) {
  t.validate();
  os << "{\"version\":" << kFormatVersion
     << ",\"n_sites\":" << t.n_sites() << ",\"bond_ranks\":[";
  const auto ranks = t.bond_ranks();
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    os << (i ? "," : "") << ranks[i];
  }
  os << "],\"cores\":[";
  for (std::size_t n = 0; n < t.n_sites(); ++n) {
    if (n != 0) {
      os << ',';
    }
    emit_nested(os, t.cores[n], 0, 0, strides_of(t.cores[n].shape()));
  }
  os << "]}\n";
}

void parse_nested(const nlohmann::json& j, DenseTensor& c, std::size_t axis,
                  std::size_t offset, const std::vector<std::size_t>& strides) {
  if (!j.is_array()) {
    throw shape_error("train file: malformed core nesting");
  }
  if (axis == c.rank()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      throw shape_error("train file: entries must be [re, im] pairs");
    }
    c[offset] = cplx{j[0].get<double>(), j[1].get<double>()};
    return;
  }
  if (j.size() != c.shape()[axis]) {
    throw shape_error("train file: core extent mismatch");
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    parse_nested(j[i], c, axis + 1, offset + i * strides[axis], strides);
  }
}

template <typename Train>
Train load_train(std::istream& is, std::size_t n_physical_axes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw shape_error(std::string("train file: ") + e.what());
  }
  if (!j.is_object() || j.value("version", -1) != kFormatVersion) {
    throw shape_error("train file: missing or unsupported version");
  }
  const std::size_t n = j.at("n_sites").get<std::size_t>();
  const auto ranks = j.at("bond_ranks").get<std::vector<std::size_t>>();
  const auto& cores = j.at("cores");
  if (n == 0 || ranks.size() != n + 1 || !cores.is_array() ||
      cores.size() != n) {
    throw shape_error("train file: inconsistent site/rank counts");
  }
  Train t;
  t.cores.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> shape{ranks[k]};
    shape.insert(shape.end(), n_physical_axes, 2);
    shape.push_back(ranks[k + 1]);
    DenseTensor c(shape);
    parse_nested(cores[k], c, 0, 0, strides_of(c.shape()));
    t.cores.push_back(std::move(c));
  }
  t.validate();
  return t;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  return is;
}

}  // namespace

void save_mps(const Mps& s, std::ostream& os) { save_train(s, os); }
void save_mpo(const Mpo& o, std::ostream& os) { save_train(o, os); }

Mps load_mps(std::istream& is) { return load_train<Mps>(is, 1); }
Mpo load_mpo(std::istream& is) { return load_train<Mpo>(is, 2); }

void save_mps(const Mps& s, const std::string& path) {
  auto os = open_out(path);
  save_train(s, os);
}

void save_mpo(const Mpo& o, const std::string& path) {
  auto os = open_out(path);
  save_train(o, os);
}

Mps load_mps(const std::string& path) {
  auto is = open_in(path);
  return load_train<Mps>(is, 1);
}

Mpo load_mpo(const std::string& path) {
  auto is = open_in(path);
  return load_train<Mpo>(is, 2);
}

}  // namespace ttlearn
