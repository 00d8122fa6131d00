#include "report.hpp"

#include <cstdio>
#include <ostream>

#include "critgroup/cli.hpp"
#include "critgroup/facet_io.hpp"

namespace critgroup::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void Report::set_input(const std::string& source, const SimplicialComplex& complex) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(format_facets(complex))));
  input_ = Json{{"source", source}, {"digest", std::string("fnv1a64:") + hex}};
}

void Report::warn_all(const std::vector<std::string>& messages) {
  for (const auto& m : messages) warn(m);
}

void Report::fail(std::string kind, std::string message) {
  error_.emplace(std::move(kind), std::move(message));
}

Json Report::to_json() const {
  Json j;
  j["command"] = command_;
  j["input"] = input_ ? *input_ : Json(nullptr);
  j["result"] = error_ ? Json(nullptr) : result_;
  j["warnings"] = warnings_;
  if (error_) j["error"] = Json{{"kind", error_->first}, {"message", error_->second}};
  return j;
}

void Report::emit(std::ostream& out, std::ostream& err, bool json) const {
  if (json) {
    out << to_json().dump(2) << '\n';
    return;
  }
  if (!error_) out << text_.str();
  for (const auto& w : warnings_) err << "warning: " << w << '\n';
  if (error_) err << "error (" << error_->first << "): " << error_->second << '\n';
}

std::string dec(const Integer& x) { return x.get_str(); }

Json dec(std::span<const Integer> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

Json dec_list(const std::vector<std::size_t>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(std::to_string(x));
  return a;
}

Json face_list(const std::vector<Simplex>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(f.to_string());
  return a;
}

std::string join(std::span<const Integer> xs, const char* sep) {
  std::string s;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j) s += sep;
    s += xs[j].get_str();
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace critgroup::cli
