#include "qcc/json_io.hpp"

#include <nlohmann/json.hpp>

#include "qcc/errors.hpp"

namespace qcc {

using nlohmann::json;

std::string code_to_json(const QuasiCode &C) {
  internal_check(C.ctx() != nullptr, "code without context");
  const auto &ctx = *C.ctx();
  json j;
  j["field"] = {{"p", ctx.spec()->p()},
                {"ell", ctx.spec()->ell()},
                {"modulus", ctx.spec()->modulus()}};
  j["n"] = ctx.n();
  j["lambda"] = ctx.lambda();
  j["kind"] =
      C.kind() == CodeKind::TwoQuasi ? "two-quasi" : "constacyclic";
  json gens = json::array();
  for (std::size_t i = 0; i < C.dim(); ++i) {
    json row = json::array();
    for (std::size_t jx = 0; jx < C.length(); ++jx)
      row.push_back(C.basis().mat.at(i, jx));
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  return j.dump(2) + "\n";
}

QuasiCode code_from_json(const std::string &text) {
  try {
    const json j = json::parse(text);
    const json &f = j.at("field");
    const auto p = f.at("p").get<std::uint32_t>();
    const auto ell = f.at("ell").get<std::uint32_t>();
    const auto modulus = f.at("modulus").get<std::vector<std::uint32_t>>();
    const FieldSpecPtr spec = field_new(p, ell, modulus);

    const auto n = j.at("n").get<std::size_t>();
    const auto lambda = j.at("lambda").get<std::uint64_t>();
    if (lambda >= spec->q())
      throw Error(ErrorKind::BadArtifact, "lambda outside the field");
    const RingContextPtr ctx =
        RingContext::make(spec, n, static_cast<Fel>(lambda));

    const auto kind_s = j.at("kind").get<std::string>();
    CodeKind kind;
    if (kind_s == "constacyclic")
      kind = CodeKind::Constacyclic;
    else if (kind_s == "two-quasi")
      kind = CodeKind::TwoQuasi;
    else
      throw Error(ErrorKind::BadArtifact, "unknown code kind");

    const auto gens = j.at("generators").get<std::vector<std::vector<std::uint64_t>>>();
    std::vector<std::vector<Fel>> words;
    words.reserve(gens.size());
    for (const auto &g : gens) {
      std::vector<Fel> w;
      w.reserve(g.size());
      for (const std::uint64_t v : g) {
        if (v >= spec->q())
          throw Error(ErrorKind::BadArtifact, "generator entry outside the field");
        w.push_back(static_cast<Fel>(v));
      }
      words.push_back(std::move(w));
    }
    return QuasiCode::from_words(ctx, kind, words);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::BadArtifact)
      throw;
    throw Error(ErrorKind::BadArtifact,
                std::string("invalid code artifact: ") + e.what());
  } catch (const json::exception &e) {
    throw Error(ErrorKind::BadArtifact,
                std::string("unreadable code artifact: ") + e.what());
  }
}

} // namespace qcc
