#include "eqres/system_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "eqres/error.hpp"

namespace eqres {
namespace {

using nlohmann::json;

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw IoError(std::string("system file lacks \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw IoError(std::string("system file field \"") + key + "\" has the wrong type");
  }
}

Polynomial parse_field(const std::string& text, const ContextPtr& ctx, const std::string& where) {
  try {
    return parse(text, ctx);
  } catch (const ParseError& e) {
    throw IoError(where + ": " + e.what());
  }
}

void check_degree(const Polynomial& f, unsigned degree, const std::string& where) {
  const auto info = degree_and_homogeneity(f);
  if (!info.degree) throw ValidationError(where + " is zero");
  if (!info.homogeneous) throw ValidationError(where + " is not homogeneous");
  if (static_cast<unsigned>(*info.degree) != degree)
    throw ValidationError(where + " has degree " + std::to_string(*info.degree) +
                          ", declared " + std::to_string(degree));
}

}  // namespace

SystemFile parse_system_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("system file must hold a JSON object");

  SystemFile out;
  const auto n = field<long long>(doc, "n");
  const auto p = field<long long>(doc, "p");
  const auto degree = field<long long>(doc, "degree");
  out.variables = field<std::vector<std::string>>(doc, "variables");
  if (doc.contains("parameters")) out.parameters = field<std::vector<std::string>>(doc, "parameters");
  if (n < 2) throw IoError("n must be at least 2");
  if (p < 1 || p >= n) throw IoError("p must satisfy 1 <= p < n");
  if (degree < 1) throw IoError("degree must be positive");
  out.n = static_cast<std::size_t>(n);
  out.p = static_cast<std::size_t>(p);
  out.degree = static_cast<unsigned>(degree);
  if (out.variables.size() != out.n)
    throw IoError("n = " + std::to_string(n) + " but " + std::to_string(out.variables.size()) +
                  " variables are listed");
  try {
    out.context = RingContext::make(out.variables, out.parameters, out.p);
  } catch (const ContextError& e) {
    throw IoError(e.what());
  }

  const bool has_system = doc.contains("system");
  const bool has_poly = doc.contains("polynomial");
  if (has_system == has_poly) throw IoError("system file needs exactly one of \"system\" and \"polynomial\"");
  if (has_system) {
    const auto texts = field<std::vector<std::string>>(doc, "system");
    if (texts.size() != out.n)
      throw IoError("n = " + std::to_string(n) + " but the system has " +
                    std::to_string(texts.size()) + " polynomials");
    for (std::size_t i = 0; i < texts.size(); ++i)
      out.system.push_back(parse_field(texts[i], out.context, "f^{" + std::to_string(i + 1) + "}"));
    for (std::size_t i = 0; i < out.n; ++i)
      check_degree(out.system[i], out.degree, "f^{" + std::to_string(i + 1) + "}");
  } else {
    out.polynomial = parse_field(field<std::string>(doc, "polynomial"), out.context, "polynomial");
    check_degree(*out.polynomial, out.degree, "polynomial");
  }
  if (doc.contains("closed_form")) {
    auto coeff = RingContext::coefficients(out.parameters);
    out.closed_form = parse_field(field<std::string>(doc, "closed_form"), coeff, "closed_form");
  }
  return out;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_file(buf.str());
}

}  // namespace eqres
