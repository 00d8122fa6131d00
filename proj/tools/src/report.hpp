#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "critgroup/exact_linalg.hpp"
#include "critgroup/simplicial_complex.hpp"

namespace critgroup::cli {

using Json = nlohmann::json;

// Everything one invocation prints. The JSON form has exactly the keys
// command, input, result, warnings (plus error on failure); all integers in
// result are decimal strings.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_input(const std::string& source, const SimplicialComplex& complex);
  Json& result() { return result_; }
  std::ostringstream& text() { return text_; }
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  void warn_all(const std::vector<std::string>& messages);
  void fail(std::string kind, std::string message);

  Json to_json() const;
  void emit(std::ostream& out, std::ostream& err, bool json) const;

 private:
  std::string command_;
  std::optional<Json> input_;
  Json result_ = Json::object();
  std::vector<std::string> warnings_;
  std::ostringstream text_;
  std::optional<std::pair<std::string, std::string>> error_;
};

std::string dec(const Integer& x);
Json dec(std::span<const Integer> xs);
Json dec_list(const std::vector<std::size_t>& xs);
Json face_list(const std::vector<Simplex>& faces);
std::string join(std::span<const Integer> xs, const char* sep = " ");
std::string yes_no(bool b);

}  // namespace critgroup::cli
