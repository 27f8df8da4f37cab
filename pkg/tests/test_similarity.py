import math
import random

import pytest

from comtext.corpus import Document, build_corpus
from comtext.similarity import (
    SymmetricMatrix,
    cosine_similarity,
    inverse_document_frequency,
    similarity_matrix,
    term_frequency,
    tfidf_vector,
)
from helpers import dense_similarity_oracle, random_corpus


def random_sparse_vector(rng, min_terms=1, max_terms=8):
    terms = rng.sample([f"t{i}" for i in range(20)], rng.randint(min_terms, max_terms))
    return {t: rng.uniform(0.01, 2.0) for t in terms}


class TestTermFrequency:
    def test_count_ratio(self):
        assert term_frequency(["a", "b", "a"]) == {"a": 2 / 3, "b": 1 / 3}

    def test_single_token(self):
        assert term_frequency(["a"]) == {"a": 1.0}

    def test_empty_is_empty_map(self):
        assert term_frequency([]) == {}

    def test_sums_to_one(self):
        rng = random.Random(23)
        for _ in range(500):
            tokens = [f"t{rng.randint(0, 9)}" for _ in range(rng.randint(1, 40))]
            assert math.fsum(term_frequency(tokens).values()) == pytest.approx(
                1.0, abs=1e-12
            )


class TestInverseDocumentFrequency:
    def test_term_in_every_document(self):
        corpus = build_corpus([Document("u1", "a b"), Document("u2", "a c")])
        assert inverse_document_frequency(corpus)["a"] == 0.0

    def test_term_in_one_of_two(self):
        corpus = build_corpus([Document("u1", "a b"), Document("u2", "a c")])
        idf = inverse_document_frequency(corpus)
        assert idf["b"] == pytest.approx(math.log(2), rel=1e-12)

    def test_term_in_one_of_four(self):
        docs = [Document(f"u{i}", "common") for i in range(3)]
        docs.append(Document("u3", "common rare"))
        idf = inverse_document_frequency(build_corpus(docs))
        assert idf["rare"] == pytest.approx(math.log(4), rel=1e-12)
        assert idf["common"] == 0.0


class TestTfidfVector:
    def test_zero_idf_terms_omitted(self):
        vec = tfidf_vector(["a", "b", "a"], {"a": 0.0, "b": math.log(2)})
        assert set(vec) == {"b"}
        assert vec["b"] == pytest.approx(math.log(2) / 3, rel=1e-12)

    def test_all_zero_idf(self):
        assert tfidf_vector(["a", "b"], {"a": 0.0, "b": 0.0}) == {}

    def test_empty_tokens(self):
        assert tfidf_vector([], {"a": 1.0}) == {}

    def test_entries_positive(self):
        rng = random.Random(31)
        for _ in range(200):
            tokens = [f"t{rng.randint(0, 5)}" for _ in range(rng.randint(1, 15))]
            idf = {f"t{i}": rng.choice([0.0, 0.3, 1.1]) for i in range(6)}
            assert all(w > 0 for w in tfidf_vector(tokens, idf).values())


class TestCosineSimilarity:
    def test_self_similarity(self):
        rng = random.Random(37)
        for _ in range(50):
            v = random_sparse_vector(rng)
            assert cosine_similarity(v, v) == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_supports(self):
        assert cosine_similarity({"a": 1.0}, {"b": 1.0}) == 0.0

    def test_half_overlap(self):
        value = cosine_similarity({"a": 1.0, "b": 1.0}, {"a": 1.0, "c": 1.0})
        assert value == pytest.approx(1 / (math.sqrt(2) * math.sqrt(2)), abs=1e-12)

    def test_zero_norm_rule(self):
        assert cosine_similarity({}, {"a": 1.0}) == 0.0
        assert cosine_similarity({}, {}) == 0.0

    def test_symmetry_range_scale_invariance(self):
        rng = random.Random(41)
        for _ in range(500):
            v1 = random_sparse_vector(rng)
            v2 = random_sparse_vector(rng)
            value = cosine_similarity(v1, v2)
            assert 0.0 <= value <= 1.0
            assert cosine_similarity(v2, v1) == pytest.approx(value, abs=1e-12)
            c = rng.uniform(0.1, 10.0)
            scaled = {t: c * w for t, w in v1.items()}
            assert cosine_similarity(scaled, v2) == pytest.approx(value, abs=1e-12)


class TestSimilarityMatrix:
    def test_matches_dense_oracle(self):
        rng = random.Random(43)
        for _ in range(25):
            corpus = random_corpus(rng)
            matrix = similarity_matrix(corpus)
            oracle = dense_similarity_oracle(corpus)
            for i, u in enumerate(corpus.users):
                for j, v in enumerate(corpus.users):
                    assert matrix.get(u, v) == pytest.approx(
                        oracle[i, j], abs=1e-12
                    )

    def test_identical_texts_with_distinguishing_third_user(self):
        corpus = build_corpus(
            [Document("u1", "a b"), Document("u2", "a b"), Document("u3", "c")]
        )
        matrix = similarity_matrix(corpus)
        assert matrix.get("u1", "u2") == pytest.approx(1.0, abs=1e-12)

    def test_two_identical_documents_degenerate_to_zero(self):
        # With only two identical documents every term has idf 0, both
        # vectors are empty, and the entry is 0 by the zero-norm rule.
        corpus = build_corpus([Document("u1", "a b"), Document("u2", "a b")])
        assert similarity_matrix(corpus).get("u1", "u2") == 0.0

    def test_single_user(self):
        matrix = similarity_matrix(build_corpus([Document("u1", "a")]))
        assert matrix.n == 1
        assert matrix.get("u1", "u1") == 0.0

    def test_empty_text_user_is_zero_row(self):
        corpus = build_corpus(
            [Document("u1", ""), Document("u2", "a b"), Document("u3", "a c")]
        )
        matrix = similarity_matrix(corpus)
        assert matrix.get("u1", "u2") == 0.0
        assert matrix.get("u1", "u3") == 0.0


class TestSymmetricMatrix:
    def test_set_get_symmetric(self):
        matrix = SymmetricMatrix(["a", "b", "c"])
        matrix.set("c", "a", 0.25)
        assert matrix.get("a", "c") == 0.25
        assert matrix.get("c", "a") == 0.25

    def test_diagonal_fixed(self):
        matrix = SymmetricMatrix(["a", "b"])
        assert matrix.get("a", "a") == 0.0
        with pytest.raises(ValueError):
            matrix.set("a", "a", 0.5)

    def test_range_enforced(self):
        matrix = SymmetricMatrix(["a", "b"])
        with pytest.raises(ValueError):
            matrix.set("a", "b", 1.5)
        matrix.set("a", "b", 1.0 + 1e-12)  # float fuzz clamps
        assert matrix.get("a", "b") == 1.0

    def test_unknown_node(self):
        matrix = SymmetricMatrix(["a", "b"])
        with pytest.raises(KeyError):
            matrix.get("a", "z")

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(ValueError):
            SymmetricMatrix(["a", "a"])

    def test_write_csv(self, tmp_path):
        matrix = SymmetricMatrix(["a", "b"])
        matrix.set("a", "b", 0.123456789)
        path = tmp_path / "matrix.csv"
        matrix.write_csv(path, precision=2)
        assert path.read_text(encoding="utf-8") == "node,a,b\na,0.00,0.12\nb,0.12,0.00\n"
