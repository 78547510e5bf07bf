"""Build bigram statistics from a corpus and score some text with them.

Walks the full scoring pipeline: normalize raw text, count adjacent letter
pairs, serialize/reload the table, and compare additive integer scoring
with log2-probability scoring.
"""

from pathlib import Path

import cipherclimb as cc

DATA = Path(__file__).resolve().parent.parent / "data"

# A tiny corpus first, small enough to check by hand.
quote = "Always remember that you are absolutely unique. Just like everyone else..."
normalized = cc.normalize(quote)
print(f"normalized ({len(normalized)} letters): {normalized}")

table = cc.build_table_from_corpus(quote)
print(f"total bigram occurrences: {int(table.scores.sum())}")
top = sorted(
    ((int(n), chr(97 + i // 26) + chr(97 + i % 26)) for i, n in enumerate(table.scores) if n),
    reverse=True,
)
print("doubles:", [bigram for n, bigram in top if n == 2])

# The shipped table was built from data/corpus.txt with the same function.
english = cc.parse_bigram_file((DATA / "english_bigrams.txt").read_text())
best = max((int(n), chr(97 + i // 26) + chr(97 + i % 26)) for i, n in enumerate(english.scores))
print(f"\nshipped table: most frequent bigram is {best[1]!r} with count {best[0]}")

sensible = cc.map_text("partofthecharmofanoldharbouristhatnothinghurries")
scrambled = cc.map_text("pxq" * 16)
print("additive score, english-looking text:", cc.score_text(sensible, english))
print("additive score, junk text:          ", cc.score_text(scrambled, english))

logs = cc.build_log_table(english)
print("log2 score, english-looking text: %.1f" % cc.log_score_text(sensible, logs))
print("log2 score, junk text:            %.1f" % cc.log_score_text(scrambled, logs))
