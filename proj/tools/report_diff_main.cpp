#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nlohmann/json.hpp"

// Compares two JSON reports for semantic equality. Wall-clock time is the one
// field allowed to differ between otherwise identical runs, so it is zeroed
// on both sides before the byte comparison.

namespace {

nlohmann::ordered_json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::ordered_json j;
  in >> j;
  return j;
}

void scrub(nlohmann::ordered_json& j) {
  if (j.contains("wall_ms")) j["wall_ms"] = 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gp-report-diff FIRST.json SECOND.json\n";
    return 2;
  }
  try {
    nlohmann::ordered_json a = load(argv[1]);
    nlohmann::ordered_json b = load(argv[2]);
    for (const auto* j : {&a, &b}) {
      if (!j->contains("schema") || (*j)["schema"] != "gp-report/1")
        throw std::runtime_error("not a gp-report/1 document");
    }
    scrub(a);
    scrub(b);
    std::string sa = a.dump(2);
    std::string sb = b.dump(2);
    if (sa == sb) {
      std::cout << "identical\n";
      return 0;
    }
    std::istringstream la(sa), lb(sb);
    std::string linea, lineb;
    int line = 0;
    while (true) {
      bool oka = static_cast<bool>(std::getline(la, linea));
      bool okb = static_cast<bool>(std::getline(lb, lineb));
      ++line;
      if (!oka && !okb) break;
      if (linea != lineb || oka != okb) {
        std::cout << "differ at line " << line << "\n";
        std::cout << "  first:  " << (oka ? linea : "<end>") << "\n";
        std::cout << "  second: " << (okb ? lineb : "<end>") << "\n";
        break;
      }
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
