#include "skein/moves.hpp"

namespace skein {

namespace {

std::set<MoveTag> omega1() { return {MoveTag::Omega1a, MoveTag::Omega1b}; }
std::set<MoveTag> omega2() {
  return {MoveTag::Omega2a, MoveTag::Omega2b, MoveTag::Omega2c, MoveTag::Omega2d};
}
std::set<MoveTag> omega3() { return {MoveTag::Omega3b, MoveTag::Omega3o}; }
std::set<MoveTag> virtual_moves() {
  return {MoveTag::VOmega1, MoveTag::VOmega2, MoveTag::VOmega3, MoveTag::SVOmega3};
}

std::set<MoveTag> join(std::initializer_list<std::set<MoveTag>> parts) {
  std::set<MoveTag> out;
  for (auto& p : parts) out.insert(p.begin(), p.end());
  return out;
}

} // namespace

KnotTheory KnotTheory::preset(const std::string& name) {
  KnotTheory t;
  t.name = name;
  if (name == "class+" || name == "class") {
    t.moves = join({omega1(), omega2(), omega3()});
  } else if (name == "class-reg+" || name == "class-reg") {
    t.moves = join({omega2(), omega3()});
  } else if (name == "virt+" || name == "virt") {
    t.moves = join({omega1(), omega2(), omega3(), virtual_moves()});
  } else if (name == "virt-reg+" || name == "virt-reg") {
    t.moves = join({omega2(), omega3(), virtual_moves()});
  } else if (name == "flat" || name == "flat+") {
    t.moves = join({omega1(), omega2(), omega3(), virtual_moves(), {MoveTag::CC}});
    t.flat_world = true;
  } else if (name == "flat-reg+" || name == "flat-reg") {
    t.moves = join({omega2(), omega3(), virtual_moves(), {MoveTag::CC}});
    t.flat_world = true;
  } else if (name == "free") {
    t.moves = join({omega1(), omega2(), omega3(), virtual_moves(),
                    {MoveTag::CC, MoveTag::Flank}});
    t.flat_world = true;
  } else if (name == "welded+" || name == "welded") {
    t.moves = join({omega1(), omega2(), omega3(), virtual_moves(),
                    {MoveTag::ForbiddenO}});
  } else if (name == "welded-reg+") {
    t.moves = join({omega2(), omega3(), virtual_moves(), {MoveTag::ForbiddenO}});
  } else if (name == "fused+" || name == "fused") {
    t.moves = join({omega1(), omega2(), omega3(), virtual_moves(),
                    {MoveTag::ForbiddenO, MoveTag::ForbiddenU}});
  } else if (name == "fused-reg+") {
    t.moves = join({omega2(), omega3(), virtual_moves(),
                    {MoveTag::ForbiddenO, MoveTag::ForbiddenU}});
  } else if (name == "fd-reg+") {
    t.moves = join({omega2(), virtual_moves(),
                    {MoveTag::ForbiddenO, MoveTag::ForbiddenU}});
  } else if (name == "delta") {
    t.moves = join({omega1(), omega2(), omega3(), {MoveTag::Delta}});
  } else if (name == "virt-delta") {
    t.moves =
        join({omega1(), omega2(), omega3(), virtual_moves(), {MoveTag::Delta}});
  } else {
    throw ParseError("unknown knot theory preset: " + name);
  }
  return t;
}

} // namespace skein
