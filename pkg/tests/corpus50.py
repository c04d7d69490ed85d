"""A 50-sentence sample corpus for the acceptance suite.

Hand-built normalized trees covering every structural family the
transfers need: plain and modal transitives (voice), plain and modal
passives, short intransitives and copulars (tense and modifier
removal), clause-edge PPs (movement and removal), and trailing
subordinate clauses (substatement removal).
"""

from __future__ import annotations

from finestyle.treebank import ParseTree, parse_bracketed

BRACKETINGS = [
    # plain transitive actives: long subjects, light objects
    "(S (NP (DT the) (NN state) (NN insurance) (NN company)) (VP (VBD sued) (NP (PRP him))))",
    "(S (NP (DT the) (NN city) (NN planning) (NN commission)) (VP (VBZ approves) (NP (PRP it))))",
    "(S (NP (DT the) (NN federal) (NN trade) (NN panel)) (VP (VBD rejected) (NP (PRP them))))",
    "(S (NP (DT the) (NNP texas) (NN oil) (NN group)) (VP (VBZ owns) (NP (PRP it))))",
    # modal transitive actives
    "(S (NP (DT the) (NN city) (NN council)) (VP (MD must) (VP (VB approve) (NP (DT the) (JJ new) (NN budget)))))",
    "(S (NP (DT the) (NN state) (NN agency)) (VP (MD can) (VP (VB cancel) (NP (DT the) (NN permit)))))",
    "(S (NP (DT the) (NN federal) (NN court)) (VP (MD may) (VP (VB review) (NP (DT the) (NN ruling)))))",
    "(S (NP (DT the) (NN airline) (NN board)) (VP (MD should) (VP (VB reject) (NP (DT the) (NN offer)))))",
    "(S (NP (DT the) (NN holding) (NN company)) (VP (MD could) (VP (VB sell) (NP (DT the) (NN unit)))))",
    "(S (NP (DT the) (NN drug) (NN maker)) (VP (MD must) (VP (VB recall) (NP (DT the) (NN product)))))",
    "(S (NP (DT the) (NN group)) (VP (MD should) (VP (VB buy) (NP (DT the) (JJ ailing) (NN carrier)) (ADVP (RB again)))))",
    "(S (NP (DT the) (NN investor)) (VP (MD might) (VP (VB sell) (NP (DT the) (JJ ailing) (NN airline)) (ADVP (RB quickly)))))",
    # plain passives
    "(S (NP (PRP it)) (VP (VBD was) (VP (VBN approved) (PP (IN by) (NP (DT the) (NN city) (NN planning) (NN commission))))))",
    "(S (NP (PRP they)) (VP (VBD were) (VP (VBN rejected) (PP (IN by) (NP (DT the) (NN federal) (NN trade) (NN panel))))))",
    # modal passives
    "(S (NP (DT the) (NN budget)) (VP (MD must) (VP (VB be) (VP (VBN approved) (PP (IN by) (NP (DT the) (NN city) (NN council)))))))",
    "(S (NP (DT the) (NN permit)) (VP (MD can) (VP (VB be) (VP (VBN canceled) (PP (IN by) (NP (DT the) (NN state) (NN agency)))))))",
    "(S (NP (DT the) (NN ruling)) (VP (MD may) (VP (VB be) (VP (VBN reviewed) (PP (IN by) (NP (DT the) (NN federal) (NN court)))))))",
    "(S (NP (DT the) (NN offer)) (VP (MD should) (VP (VB be) (VP (VBN rejected) (PP (IN by) (NP (DT the) (NN airline) (NN board)))))))",
    "(S (NP (DT the) (NN unit)) (VP (MD could) (VP (VB be) (VP (VBN sold) (PP (IN by) (NP (DT the) (NN holding) (NN company)))))))",
    "(S (NP (DT the) (NN product)) (VP (MD must) (VP (VB be) (VP (VBN recalled) (PP (IN by) (NP (DT the) (NN drug) (NN maker)))))))",
    # short intransitives with a trailing adverb
    "(S (NP (DT the) (NN trade) (NN deficit)) (VP (VBD narrowed) (ADVP (RB sharply))))",
    "(S (NP (DT the) (NN stock) (NN market)) (VP (VBD rallied) (ADVP (RB strongly))))",
    "(S (NP (DT the) (NN bond) (NN market)) (VP (VBD recovered) (ADVP (RB quickly))))",
    "(S (NP (DT the) (NN oil) (NN company)) (VP (VBD expanded) (ADVP (RB abroad))))",
    "(S (NP (DT the) (NN computer) (NN maker)) (VP (VBD struggled) (ADVP (RB recently))))",
    "(S (NP (DT the) (NN company) (NN chairman)) (VP (VBD resigned) (ADVP (RB abruptly))))",
    "(S (NP (DT the) (NN bond) (NN issue)) (VP (VBD sold) (ADVP (RB briskly))))",
    "(S (NP (DT the) (NN currency) (NN market)) (VP (VBD stabilized) (ADVP (RB gradually))))",
    # copulars: predicative adjectives stay put
    "(S (NP (DT the) (NN market) (NN outlook)) (VP (VBZ is) (ADJP (JJ bleak))))",
    "(S (NP (DT the) (NN profit) (NN outlook)) (VP (VBZ remains) (ADJP (JJ bleak))))",
    "(S (NP (DT the) (NN trading) (NN floor)) (VP (VBD was) (ADJP (JJ quiet))))",
    "(S (NP (DT the) (NNS futures) (NN pit)) (VP (VBD was) (ADJP (JJ calm))))",
    "(S (NP (DT the) (NN credit) (NN outlook)) (VP (VBZ is) (ADJP (JJ grim))))",
    "(S (NP (DT the) (NN banking) (NN sector)) (VP (VBZ remains) (ADJP (JJ weak))))",
    "(S (NP (DT the) (NN takeover) (NN rumor)) (VP (VBD was) (ADJP (JJ false))))",
    "(S (NP (DT the) (NN merger) (NN premium)) (VP (VBZ is) (ADJP (JJ small))))",
    # clause-initial PPs
    "(S (PP (IN in) (NP (NNP tokyo))) (NP (DT the) (NN dollar)) (VP (VBD slipped)))",
    "(S (PP (IN in) (NP (NNP chicago))) (NP (DT the) (NN exchange)) (VP (VBD struggled)))",
    "(S (PP (IN after) (NP (DT the) (NN crash))) (NP (DT the) (NN market)) (VP (VBD stumbled)))",
    "(S (PP (IN during) (NP (DT the) (NN session))) (NP (DT the) (NN index)) (VP (VBD climbed)))",
    # clause-final PPs
    "(S (NP (DT the) (NN index)) (VP (VBD fell) (PP (IN after) (NP (DT the) (NN vote)))))",
    "(S (NP (DT the) (NN market)) (VP (VBD rose) (PP (IN after) (NP (DT the) (NN crash)))))",
    "(S (NP (DT the) (NN panel)) (VP (MD will) (VP (VB rule) (PP (IN after) (NP (DT the) (NN vote))))))",
    "(S (NP (DT the) (NN board)) (VP (MD may) (VP (VB act) (PP (IN after) (NP (DT the) (NN review))))))",
    # trailing subordinate clauses under a modal matrix verb
    "(S (NP (DT the) (NN market)) (VP (MD may) (VP (VB slip) (SBAR (IN because) (S (NP (DT the) (NN dollar)) (VP (VBD weakened)))))))",
    "(S (NP (DT the) (NN company)) (VP (MD will) (VP (VB suffer) (SBAR (IN if) (S (NP (DT the) (NNS talks)) (VP (VBP fail)))))))",
    "(S (NP (DT the) (NN index)) (VP (MD could) (VP (VB fall) (SBAR (IN unless) (S (NP (DT the) (NNP fed)) (VP (VBZ acts)))))))",
    "(S (NP (DT the) (NN price)) (VP (MD should) (VP (VB rise) (SBAR (WHADVP (WRB when)) (S (NP (DT the) (JJ new) (NNS rules)) (VP (VBP take) (NP (NN effect))))))))",
    "(S (NP (DT the) (NN bank)) (VP (MD can) (VP (VB recover) (SBAR (IN if) (S (NP (DT the) (NN economy)) (VP (VBZ improves) (ADVP (RB soon))))))))",
    "(S (NP (DT the) (NN state)) (VP (MD should) (VP (VB intervene) (SBAR (IN before) (S (NP (DT the) (NN crisis)) (VP (VBZ deepens) (ADVP (RB further))))))))",
]


def sample_corpus() -> list[ParseTree]:
    trees = [parse_bracketed(text) for text in BRACKETINGS]
    assert len(trees) == 50
    return trees
