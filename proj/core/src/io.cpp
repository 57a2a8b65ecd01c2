#include "csg/io.hpp"

#include <json.hpp>

namespace csg {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::Parse, "horn file: " + why); }

template <class I>
Horn<I> read_horn(const nlohmann::json& j, std::size_t n, std::size_t k) {
  Horn<I> h;
  h.n = n;
  h.k = k;
  h.base = Perm::parse(j.at("base").get<std::string>());
  for (const auto& [key, value] : j.at("faces").items()) {
    std::size_t r = 0;
    try {
      std::size_t used = 0;
      r = std::stoul(key, &used);
      if (used != key.size()) malformed("face key '" + key + "' is not an index");
    } catch (const std::logic_error&) {
      malformed("face key '" + key + "' is not an index");
    }
    const auto text = value.template get<std::string>();
    if constexpr (std::is_same_v<I, Symmetric>) {
      h.faces.emplace(r, Perm::parse(text));
    } else {
      h.faces.emplace(r, BraidWord::parse(text, n - 1));
    }
  }
  return h;
}

template <class I>
std::string write_horn(const Horn<I>& h) {
  ojson j;
  j["instance"] = std::string(I::name());
  j["level"] = h.n;
  j["k"] = h.k;
  ojson faces = ojson::object();
  for (const auto& [r, y] : h.faces) {
    faces[std::to_string(r)] = y.to_string();
  }
  j["faces"] = std::move(faces);
  j["base"] = h.base.to_string();
  return j.dump(2) + "\n";
}

// Bare element text: braid words without the level suffix.
template <class I>
std::string word(const typename I::Element& x) {
  return x.to_string();
}

template <class I>
ojson simplex_json(const NerveSimplex<I>& s) {
  ojson j;
  j["start"] = s.start.to_string();
  ojson chain = ojson::array();
  for (const auto& f : s.chain) chain.push_back(word<I>(f));
  j["chain"] = std::move(chain);
  ojson objects = ojson::array();
  for (const auto& o : s.objects()) objects.push_back(o.to_string());
  j["objects"] = std::move(objects);
  return j;
}

template <class I>
std::string write_nerve(const std::vector<NerveSimplex<I>>& simplices) {
  ojson out;
  out["instance"] = std::string(I::name());
  ojson list = ojson::array();
  for (const auto& s : simplices) {
    ojson j = simplex_json<I>(s);
    j["level"] = s.start.level();
    j["dimension"] = s.dimension();
    ojson faces = ojson::array();
    if (s.dimension() >= 1) {
      for (std::size_t i = 0; i <= s.dimension(); ++i) faces.push_back(simplex_json<I>(nerve_face<I>(i, s)));
    }
    j["faces"] = std::move(faces);
    ojson degs = ojson::array();
    for (std::size_t i = 0; i <= s.dimension(); ++i) degs.push_back(simplex_json<I>(nerve_degeneracy<I>(i, s)));
    j["degeneracies"] = std::move(degs);
    ojson q = ojson::array();
    for (const auto& f : quotient_map<I>(s)) q.push_back(word<I>(f));
    j["quotient"] = std::move(q);
    list.push_back(std::move(j));
  }
  out["simplices"] = std::move(list);
  return out.dump(2) + "\n";
}

}  // namespace

AnyHorn parse_horn_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  try {
    const auto instance = j.at("instance").get<std::string>();
    const auto n = j.at("level").get<long long>();
    const auto k = j.at("k").get<long long>();
    if (n < 1) malformed("level must be at least 1");
    if (k < 0) malformed("k must be non-negative");
    if (instance == Symmetric::name()) return read_horn<Symmetric>(j, n, k);
    if (instance == Braid::name()) return read_horn<Braid>(j, n, k);
    malformed("unknown instance '" + instance + "'");
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

std::string horn_to_json(const Horn<Symmetric>& h) { return write_horn(h); }
std::string horn_to_json(const Horn<Braid>& h) { return write_horn(h); }

std::string nerve_to_json(const std::vector<NerveSimplex<Symmetric>>& s) { return write_nerve(s); }
std::string nerve_to_json(const std::vector<NerveSimplex<Braid>>& s) { return write_nerve(s); }

std::string gamma_skeleton_dot(std::size_t level) {
  const auto objects = all_perms(level);
  std::string out = "digraph gamma_" + std::to_string(level) + " {\n";
  for (const auto& o : objects) out += "  \"" + o.to_string() + "\";\n";
  for (const auto& o : objects) {
    for (const auto& f : objects) {
      const GroupoidArrow<Symmetric> a{o, f};
      out += "  \"" + o.to_string() + "\" -> \"" + a.target().to_string() + "\" [label=\"" + f.to_string() + "\"];\n";
    }
  }
  return out + "}\n";
}

}  // namespace csg
