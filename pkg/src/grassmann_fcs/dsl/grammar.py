from __future__ import annotations

import lark

GRAMMAR = r"""
?expr: product
     | expr "+" product     -> add
     | expr "-" product     -> sub

?product: unary
        | product "*" unary -> mul
        | product "/" unary -> div

?unary: atom
      | "-" unary           -> neg

?atom: NUMBER               -> number
     | "i"                  -> imag
     | "pi"                 -> pi
     | GEN                  -> gen
     | FUNC "(" expr ")"    -> call
     | "(" expr ")"

state: lead (plus_term | minus_term)*
?lead: term
     | "-" term             -> minus_lead
plus_term: "+" term
minus_term: "-" term

term: coefficient? tensor
coefficient: atom "*"?
tensor: factor ("(x)" factor)*
?factor: ket
       | fock
       | "(" state ")"
ket: "|" expr ":" GEN ">"
fock: "|" BITS ">"

measure: "d" GEN ("," "d" GEN)*

FUNC: "sqrt" | "exp"
GEN: /t[1-9][0-9]*'?/
BITS: /[01]+/

%import common.NUMBER
%import common.WS
%ignore WS
"""

PARSER = lark.Lark(GRAMMAR, start=["expr", "state", "measure"], parser="earley")
