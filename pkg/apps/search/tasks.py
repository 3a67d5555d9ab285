from config.celery import app

from .cliques import explore_branch, table_from_payload


@app.task
def explore_branches(payload, branches):
    """Explore a chunk of top-level branches of the max-k search

    Every branch gets the same expansion budget, so the merged result does
    not depend on how branches were split into chunks.
    """
    table = table_from_payload(payload)
    ret = []
    for root in branches:
        clique, expansions, complete = explore_branch(table, root, payload['budget'])
        ret.append({
            'root': root,
            'clique': list(clique),
            'expansions': expansions,
            'complete': complete,
        })
    return ret
