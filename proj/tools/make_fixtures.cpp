// Writes the fixture directory from the built-in catalog.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cogkit/catalog.hpp"
#include "cogkit/io.hpp"

using namespace cogkit;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const Emitter& em) {
  std::ofstream out(dir / (name + ".json"), std::ios::binary);
  out << dump(em.bundle());
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  {
    Emitter em;
    em.add(trivial_group(), "trivial");
    em.add(fixtures::point(), "point");
    em.add(share(trivial_complex(fixtures::point())), "point-trivial");
    write(dir, "point", em);
  }
  {
    Emitter em;
    const CogPtr seg = fixtures::seg23();
    em.add(trivial_group(), "trivial");
    em.add(seg->base, "segment");
    em.add(seg, "seg23");
    em.add(fixtures::seg23_to_z6(seg), "to-z6");
    const CogMorphism collapse = fixtures::seg23_collapse(seg);
    em.add(collapse.target, "segment-trivial");
    em.add(collapse, "seg23-collapse");
    write(dir, "seg23", em);
  }
  {
    Emitter em;
    const CogPtr c = fixtures::star_s3();
    em.add(c->groups[1], "Z2");
    em.add(c, "star-s3");
    write(dir, "star_s3", em);
  }
  {
    Emitter em;
    em.add(trivial_group(), "trivial");
    const CogPtr c = share(trivial_complex(fixtures::two_simplex()));
    em.add(c->base, "simplex2");
    em.add(c, "simplex2-trivial");
    write(dir, "simplex2", em);
  }
  {
    Emitter em;
    em.add(trivial_group(), "trivial");
    const CogPtr c = share(trivial_complex(fixtures::circle()));
    em.add(c->base, "circle");
    em.add(c, "circle-trivial");
    write(dir, "circle", em);
  }
  {
    Emitter em;
    const CogPtr c = fixtures::triangle_twisted();
    em.add(c->base, "triangle");
    em.add(c, "triangle-twisted");
    write(dir, "triangle_twisted", em);
  }
  {
    Emitter em;
    const CogMorphism f = fixtures::fold2();
    em.add(trivial_group(), "trivial");
    em.add(f.source, "pod2");
    em.add(f.target, "pod1");
    em.add(f, "fold2");
    write(dir, "fold2", em);
  }
  std::cout << "fixtures written to " << dir.string() << "\n";
  return 0;
}
