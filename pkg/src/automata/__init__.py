# Automata package
