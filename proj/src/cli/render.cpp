#include <algorithm>
#include <sstream>

#include "octavo/cli/commands.hpp"

namespace octavo::cli {

using nlohmann::json;

namespace {

std::string set_text(const json& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i].get<int>());
  }
  return out + "}";
}

std::string window_text(const json& window) {
  std::string out = "[";
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window[i].get<int>());
  }
  return out + "]";
}

SignedPermutation from_json_window(const json& window) { return SignedPermutation(window.get<std::vector<int>>()); }

const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

std::string blocks_text(const json& list) {
  std::string out;
  for (const auto& b : list) {
    if (!out.empty()) out += " ";
    out += "[" + std::to_string(b["rows"][0].get<int>()) + "," + std::to_string(b["rows"][1].get<int>()) + "]" +
           (b["odd"].get<bool>() ? "o" : "e");
  }
  return out.empty() ? "-" : out;
}

void render_verify(std::ostream& os, const json& doc) {
  os << "verify n=" << doc["n"] << "\n";
  for (const auto& r : doc["records"]) {
    os << "  I={" << r["set"].get<std::string>() << "}  " << verdict(r["equal"].get<bool>()) << "  S = "
       << r["s_poly"]["text"].get<std::string>();
    if (!r["equal"].get<bool>()) os << "  but f = " << r["f_poly"]["text"].get<std::string>();
    os << "\n";
    if (!r["chessboard_equal"].get<bool>()) os << "    chessboard sum differs\n";
    if (!r["pinned_total_equal"].get<bool>()) os << "    pinned sums do not add up\n";
    if (!r["recursion_holds"].is_null() && !r["recursion_holds"].get<bool>()) os << "    recursion fails\n";
    if (r.contains("counterexample")) {
      const auto& c = r["counterexample"];
      os << "    first difference at X^" << c["degree"] << ": S has " << c["s_coefficient"].get<std::string>()
         << ", f has " << c["f_coefficient"].get<std::string>() << "\n";
      if (!c["element"].is_null())
        os << "    witness " << window_text(c["element"]["window"]) << " L=" << c["element"]["L"]
           << " length=" << c["element"]["length"] << "\n";
    }
  }
  const auto& abc = doc["lemmas"]["abc"];
  os << "  abc decomposition over B_" << doc["n"] << ": " << verdict(abc["pass"].get<bool>()) << "\n";
}

void render_conjecture(std::ostream& os, const json& doc) {
  os << "conjecture n=" << doc["n"] << "\n";
  for (const auto& r : doc["records"]) {
    os << "  I={" << r["set"].get<std::string>() << "}  divisible=" << (r["divisible"].get<bool>() ? "yes" : "no")
       << "  0 in I=" << (r["zero_in_set"].get<bool>() ? "yes" : "no") << "  " << verdict(r["agrees"].get<bool>())
       << "\n";
    if (!r["agrees"].get<bool>()) os << "    sum = " << r["bipoly_text"].get<std::string>() << "\n";
  }
}

void render_stats(std::ostream& os, const json& doc) {
  const auto w = from_json_window(doc["window"]);
  os << "window     " << window_text(doc["window"]) << "\n";
  os << render_matrix(w);
  os << "D(w)       " << set_text(doc["descent_set"]) << "\n";
  os << "length     " << doc["length"] << "\n";
  os << "sign       " << doc["sign"] << "\n";
  os << "L          " << doc["L"] << "\n";
  os << "chessboard " << (doc["chessboard"].get<bool>() ? "true" : "false") << "\n";
  os << "pin        " << doc["pinned_column"] << "\n";
  const auto& abc = doc["abc"];
  os << "abc        a=" << abc["a"] << " b=" << abc["b"] << " c=" << abc["c"] << "  a+b+2c=" << abc["a_plus_b_plus_2c"]
     << "\n";
}

void render_gf(std::ostream& os, const json& doc) {
  os << "n=" << doc["n"] << " I={" << doc["set"].get<std::string>() << "}\n";
  os << "S   = " << doc["s_poly"]["text"].get<std::string>() << "\n";
  os << "f   = " << doc["f_poly"]["text"].get<std::string>() << "\n";
  os << "S-f = " << doc["difference"]["text"].get<std::string>() << "\n";
  for (const auto& p : doc["pinned"])
    os << "  pinned at " << p["column"] << ": " << p["poly"]["text"].get<std::string>() << "\n";
}

void render_trace(std::ostream& os, const json& trace) {
  for (const auto& s : trace) {
    const auto w = from_json_window(s["window"]);
    os << s["stage"].get<std::string>() << " = " << window_text(s["window"]) << "  L=" << s["L"]
       << " sign=" << s["sign"];
    if (!s["word"].empty()) {
      os << "  " << (s["right_product"].get<bool>() ? "times on the right by" : "times on the left by");
      for (const auto& i : s["word"]) os << " s" << i.get<int>();
    }
    os << "\n";
    os << render_matrix(w, s["blocks"]["reference_column"].get<int>());
    os << "  blocks " << blocks_text(s["blocks"]["blocks"]) << "  ones " << blocks_text(s["blocks"]["ones_blocks"])
       << "  minus " << blocks_text(s["blocks"]["minus_blocks"]) << "\n";
  }
}

void render_bijection(std::ostream& os, const json& doc) {
  if (doc.contains("window")) {
    os << "H(" << window_text(doc["window"]) << ", j=" << doc["j"] << ") = " << window_text(doc["image"]) << "\n";
    os << "L " << doc["L"] << " -> " << doc["image_L"] << ", sign " << doc["sign"] << " -> " << doc["image_sign"]
       << "\n";
  } else {
    os << "n=" << doc["n"] << " I={" << doc["set"].get<std::string>() << "} j=" << doc["j"] << " J={"
       << doc["image_set"].get<std::string>() << "}  |U|=" << doc["domain_size"] << " |V|=" << doc["codomain_size"]
       << "\n";
  }
  for (const auto& [name, value] : doc["checks"].items()) os << "  " << name << ": " << verdict(value.get<bool>()) << "\n";
  if (doc.contains("trace")) render_trace(os, doc["trace"]);
  if (doc.contains("elements")) {
    for (const auto& e : doc["elements"]) {
      os << "  " << window_text(e["window"]) << " -> " << window_text(e["image"]) << "  L " << e["L"] << " -> "
         << e["image_L"] << "\n";
      if (e.contains("trace")) render_trace(os, e["trace"]);
    }
  }
}

void render_swaps(std::ostream& os, const json& doc) {
  const auto w = from_json_window(doc["window"]);
  const int k = doc["reference_column"].get<int>();
  std::vector<int> marked;
  for (const auto& m : doc["swaps"])
    for (const auto& c : m["column_indices"])
      if (std::find(marked.begin(), marked.end(), c.get<int>()) == marked.end()) marked.push_back(c.get<int>());
  os << "window " << window_text(doc["window"]) << "  k=" << k << "\n";
  os << render_matrix(w, k, marked);
  os << "blocks " << blocks_text(doc["blocks"]["blocks"]) << "  ones " << blocks_text(doc["blocks"]["ones_blocks"])
     << "  minus " << blocks_text(doc["blocks"]["minus_blocks"]) << "\n";
  if (doc["swaps"].empty()) os << "no swaps\n";
  for (const auto& m : doc["swaps"])
    os << "  " << m["kind"].get<std::string>() << " " << m["columns"].get<std::string>() << "\n";
  for (const auto& [family, x] : doc["least"].items()) {
    os << "least " << family << ": ";
    if (x.is_null())
      os << "none\n";
    else
      os << x["kind"].get<std::string>() << " " << x["columns"].get<std::string>() << " -> "
         << window_text(x["result"]) << "\n";
  }
  for (const char* side : {"initially_uncanceled", "finally_uncanceled"}) {
    const auto& c = doc[side];
    os << side << ": ";
    if (c.contains("precondition")) {
      os << "n/a (" << c["precondition"].get<std::string>() << ")\n";
      continue;
    }
    os << (c["overall"].get<bool>() ? "yes" : "no") << "  properties";
    for (const auto& p : c["properties"]) os << " " << (p.get<bool>() ? 1 : 0);
    os << "\n";
  }
}

}  // namespace

std::string render_matrix(const SignedPermutation& w, int divider, const std::vector<int>& marked) {
  const int n = w.rank();
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << (s.size() < 3 ? std::string(3 - s.size(), ' ') : "") << s;
  };
  os << "    ";
  for (int c = 1; c <= n; ++c) {
    cell(std::to_string(c));
    if (c == divider && c < n) os << " |";
  }
  os << "\n";
  for (int r = 1; r <= n; ++r) {
    cell(std::to_string(r));
    os << " ";
    for (int c = 1; c <= n; ++c) {
      int e = w.entry(r, c);
      cell(e == 0 ? "." : std::to_string(e));
      if (c == divider && c < n) os << " |";
    }
    os << "\n";
  }
  if (!marked.empty()) {
    os << "    ";
    for (int c = 1; c <= n; ++c) {
      cell(std::find(marked.begin(), marked.end(), c) != marked.end() ? "^" : "");
      if (c == divider && c < n) os << "  ";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  const auto command = doc.at("command").get<std::string>();
  if (command == "verify") render_verify(os, doc);
  else if (command == "conjecture") render_conjecture(os, doc);
  else if (command == "stats") render_stats(os, doc);
  else if (command == "gf") render_gf(os, doc);
  else if (command == "bijection") render_bijection(os, doc);
  else if (command == "swaps") render_swaps(os, doc);
  os << (doc.at("overall_pass").get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace octavo::cli
