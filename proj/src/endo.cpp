#include "pjohnson/endo.hpp"

#include <algorithm>

#include "pjohnson/errors.hpp"

namespace pjohnson {

GroupEndo GroupEndo::identity(const GroupContext& ctx) {
  std::vector<Word> images;
  for (int j = 1; j <= ctx.rank; ++j) images.push_back(Word::generator(j));
  return GroupEndo(ctx, std::move(images));
}

GroupEndo GroupEndo::inner(const GroupContext& ctx, const Word& x) {
  if (x.max_generator() > ctx.rank) {
    throw UsageError("conjugating word uses a generator beyond x" + std::to_string(ctx.rank));
  }
  std::vector<Word> images;
  Word xinv = x.inverse();
  for (int j = 1; j <= ctx.rank; ++j) {
    images.push_back(x * Word::generator(j) * xinv);
  }
  return GroupEndo(ctx, std::move(images));
}

GroupEndo GroupEndo::from_images(const GroupContext& ctx, std::vector<Word> images) {
  if (images.size() != static_cast<std::size_t>(ctx.rank)) {
    throw UsageError("expected " + std::to_string(ctx.rank) + " generator images, got " +
                     std::to_string(images.size()));
  }
  for (const Word& w : images) {
    if (w.max_generator() > ctx.rank) {
      throw UsageError("generator image " + to_string(w) + " uses a generator beyond x" +
                       std::to_string(ctx.rank));
    }
  }
  return GroupEndo(ctx, std::move(images));
}

std::size_t GroupEndo::max_image_size() const {
  std::size_t n = 0;
  for (const Word& w : images_) n = std::max(n, w.size());
  return n;
}

Word apply_endo(const GroupEndo& phi, const Word& w, std::size_t guard) {
  return substitute(w, phi.images(), guard);
}

}  // namespace pjohnson
