#include <doctest.h>

#include "tense/builtin_examples.hpp"
#include "tense/frame.hpp"

using namespace tense;

TEST_CASE("frame construction") {
  FramePtr j = examples::frame_j3();
  CHECK(j->size() == 3);
  CHECK(j->related(j->index_of("f2"), j->index_of("f3")));
  CHECK(j->related(j->index_of("f3"), j->index_of("f2")));
  CHECK(j->related(j->index_of("f4"), j->index_of("f4")));
  CHECK_FALSE(j->related(j->index_of("f2"), j->index_of("f2")));

  CHECK(Frame::make({"*"}, {})->rel().empty());
  CHECK(Frame::make({"*"}, {{"*", "*"}})->rel().size() == 1);

  CHECK_THROWS_AS(Frame::make({"a", "a"}, {}), Error);
  try {
    Frame::make({"a"}, {{"a", "b"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownNode);
  }
}

TEST_CASE("frame homs preserve the relation") {
  FramePtr j = examples::frame_j3();
  FramePtr refl = Frame::make({"*"}, {{"*", "*"}});
  FramePtr irrefl = Frame::make({"*"}, {});

  CHECK(is_frame_hom(std::vector<int>{0, 1, 2}, *j, *j));
  CHECK(is_frame_hom(std::vector<int>{0, 0, 0}, *j, *refl));
  CHECK_FALSE(is_frame_hom(std::vector<int>{0, 0, 0}, *j, *irrefl));

  FrameHom id = FrameHom::identity(j);
  FrameHom collapse = FrameHom::checked(j, refl, {0, 0, 0});
  // composition of frame homs is a frame hom (checked on construction)
  FrameHom all = FrameHom::compose(FrameHom::identity(refl), collapse);
  CHECK(all.table == collapse.table);
  CHECK(FrameHom::compose(id, id).table == id.table);
}
