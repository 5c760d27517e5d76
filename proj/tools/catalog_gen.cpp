// Regenerates the shipped catalog files from the built-in constructions.
#include <cstdio>
#include <string>

#include "flatwalk/catalog.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "catalog";
  using namespace flatwalk;
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    std::string path = dir + "/" + name + ".surf";
    write_surface_file(s, path, name);
    std::printf("wrote %s (%s, area %s)\n", path.c_str(), s.stratum().str().c_str(),
                s.area().str().c_str());
  }
  return 0;
}
